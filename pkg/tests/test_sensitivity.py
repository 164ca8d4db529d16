import numpy as np
import pytest

from techrace.model import ModelParams, cumulative_risk
from techrace.scenarios import ScenarioSpec, build_preset, preset_names, run_scenario
from techrace.sensitivity import (
    BandSpec,
    DEFAULT_GRIDS,
    SweepGrid,
    arc_elasticity,
    detection_theta_curve,
    oat_sweep,
    rai_shift_sensitivity,
    sweep_csv,
    uncertainty_band,
)


def test_default_grids_match_documented_ranges():
    assert DEFAULT_GRIDS["p_max"] == (100.0, 110.0, 120.0, 130.0, 140.0)
    assert DEFAULT_GRIDS["pi0"] == (0.05, 0.10, 0.15, 0.20)
    assert DEFAULT_GRIDS["eta"] == (1.0, 2.0, 3.0, 4.0, 5.0)
    assert DEFAULT_GRIDS["beta"] == (0.05, 0.08, 0.10, 0.12, 0.15)
    assert DEFAULT_GRIDS["kappa"] == (0.25, 0.33, 0.40, 0.50, 0.60)
    assert DEFAULT_GRIDS["tau"] == (20.0, 30.0, 40.0, 50.0, 60.0)


def test_eta_sweep_shape_and_base_point():
    result = oat_sweep(SweepGrid("eta"))
    assert len(result.points) == 15
    surface = result.surface()
    expected = run_scenario("transformative/baseline/opp").r10
    assert surface[(3.0, "transformative")] == pytest.approx(expected, abs=1e-12)
    assert surface[(3.0, "transformative")] == pytest.approx(1.441, abs=0.02)


def test_eta_sweep_more_than_doubles_transformative_risk():
    surface = oat_sweep(SweepGrid("eta", regimes=("transformative",))).surface()
    assert surface[(5.0, "transformative")] / surface[(1.0, "transformative")] > 2.0


def test_kappa_sweep_has_small_spread():
    for regime in ("limited", "disruptive", "transformative"):
        surface = oat_sweep(SweepGrid("kappa", regimes=(regime,))).surface()
        vals = [surface[(k, regime)] for k in DEFAULT_GRIDS["kappa"]]
        assert max(vals) / min(vals) < 1.25


def test_regime_ranking_preserved_on_every_default_grid_point():
    for parameter in DEFAULT_GRIDS:
        surface = oat_sweep(SweepGrid(parameter)).surface()
        for value in DEFAULT_GRIDS[parameter]:
            limited = surface[(value, "limited")]
            disruptive = surface[(value, "disruptive")]
            transformative = surface[(value, "transformative")]
            assert limited < disruptive < transformative


def test_unknown_sweep_parameter_lists_valid_names():
    with pytest.raises(ValueError) as err:
        SweepGrid("gamma")
    assert "kappa" in str(err.value)


def test_out_of_range_values_warn_but_run():
    with pytest.warns(UserWarning):
        result = oat_sweep(SweepGrid("eta", values=(9.0,), regimes=("limited",)))
    assert len(result.points) == 1


def test_sweep_csv_header():
    text = sweep_csv(oat_sweep(SweepGrid("eta", values=(3.0,), regimes=("limited",))))
    lines = text.strip().splitlines()
    assert lines[0] == "parameter,value,regime,r10"
    assert lines[1].startswith("eta,3,limited,")


def test_arc_elasticity_zero_for_inert_parameter():
    # with opportunism disabled the hazard slope has no effect at all
    base = build_preset("limited/baseline/no-opp")
    assert arc_elasticity("beta", 0.05, 0.15, base) == 0.0


def test_arc_elasticity_signs():
    base = build_preset("disruptive/baseline/opp")
    assert arc_elasticity("eta", 1.0, 5.0, base) > 0.0
    assert arc_elasticity("pi0", 0.05, 0.20, base) < 0.0


def test_arc_elasticity_undefined_at_zero_risk():
    base = build_preset("limited/baseline/no-opp").with_(lambda0=0.0)
    with pytest.raises(ValueError):
        arc_elasticity("eta", 1.0, 5.0, base)


def test_rai_shift_zero_is_zero():
    assert rai_shift_sensitivity("limited/baseline/no-opp", 0.0) == 0.0


def test_rai_shift_positive_for_limited_baseline():
    assert rai_shift_sensitivity("limited/baseline/no-opp", 1.0) > 0.0


@pytest.mark.parametrize("name", sorted(preset_names()))
def test_rai_shift_monotone_sandwich(name):
    down = rai_shift_sensitivity(name, -1.0)
    up = rai_shift_sensitivity(name, 1.0)
    assert down <= 0.0 <= up


def test_theta_curve_inflections():
    curves = detection_theta_curve((-20.0, -10.0, 0.0, 10.0, 20.0))
    inflections = {c.theta: c.inflection_rai for c in curves}
    assert inflections == {-20.0: 50.0, -10.0: 25.0, 0.0: 0.0, 10.0: -25.0, 20.0: -50.0}
    for c in curves:
        assert c.pr_at_inflection == pytest.approx(0.55, abs=1e-12)
        idx = int(np.argmin(np.abs(c.rai - c.inflection_rai)))
        assert c.pr[idx] == pytest.approx(0.55, abs=1e-9)
        assert np.all(np.diff(c.pr) <= 0)
        window = np.abs(c.rai - c.inflection_rai) < 20
        assert np.all(np.diff(c.pr[window]) < 0)


def test_band_zero_width_without_variation():
    spec = BandSpec(step_time_offsets=(0.0,), step_scale_factors=(1.0,), resolution=10)
    env = uncertainty_band(build_preset("limited/baseline/no-opp"), spec)
    for name in ("p", "d", "rai", "cumulative_risk"):
        assert np.all(env.width(name) == 0.0)


def test_band_envelopes_bracket_nominal():
    env = uncertainty_band(build_preset("limited/baseline/no-opp"), BandSpec(resolution=10))
    for name in ("p", "d", "rai", "cumulative_risk"):
        lo, nom, hi = env.fields[name]
        assert np.all(lo <= nom + 1e-12)
        assert np.all(nom <= hi + 1e-12)


def test_band_advantage_width_grows_over_horizon():
    env = uncertainty_band(build_preset("limited/baseline/no-opp"), BandSpec(resolution=10))
    width = env.width("rai")
    assert width[-1] >= width[0]
    assert width[0] == 0.0


def test_band_parameter_grid_variation():
    spec = BandSpec(
        step_time_offsets=(0.0,),
        step_scale_factors=(1.0,),
        parameter_grids={"g_p": (0.2, 0.23, 0.26)},
        resolution=10,
    )
    env = uncertainty_band(build_preset("limited/baseline/no-opp"), spec)
    assert np.all(env.width("d") == 0.0)
    assert env.width("p")[-1] > 0.0
