import math

import numpy as np
import pytest

from techrace.model import ModelParams, breakout_prob, cumulative_risk
from techrace.montecarlo import MCConfig, _undetected_counts, simulate, validate
from techrace.scenarios import build_preset


def test_zero_hazard_means_zero_undetected(limited_base):
    cfg = MCConfig(limited_base.with_(lambda0=0.0), trials=5000, seed=1)
    result = simulate(cfg)
    assert result.mean_undetected == 0.0
    assert result.p_at_least_one == 0.0


def test_certain_detection_means_zero_undetected(limited_base):
    cfg = MCConfig(limited_base.with_(pi0=1.0), trials=5000, seed=1)
    result = simulate(cfg)
    assert result.mean_undetected == 0.0


def test_identical_seed_is_bitwise_identical(transformative_opp):
    cfg = MCConfig(transformative_opp, trials=20000, seed=7)
    assert simulate(cfg) == simulate(cfg)


def test_different_seeds_differ(transformative_opp):
    a = simulate(MCConfig(transformative_opp, trials=20000, seed=7))
    b = simulate(MCConfig(transformative_opp, trials=20000, seed=8))
    assert a.mean_undetected != b.mean_undetected


def test_trial_streams_do_not_depend_on_total_count(transformative_opp):
    # trial i's outcome is a function of (seed, i) alone, so a longer run
    # extends the counts without perturbing earlier trials
    short = _undetected_counts(MCConfig(transformative_opp, trials=6000, seed=3))
    long = _undetected_counts(MCConfig(transformative_opp, trials=12000, seed=3))
    np.testing.assert_array_equal(long[:6000], short)


def test_limited_baseline_agrees_with_quadrature(limited_base):
    report = validate("limited/baseline/no-opp", trials=100_000, seed=1)
    assert report.analytic_r == pytest.approx(0.170, abs=0.005)
    assert report.passed
    assert not report.inconclusive


def test_single_trial_is_inconclusive(limited_base):
    report = validate("limited/baseline/no-opp", trials=1, seed=0)
    assert report.inconclusive
    assert math.isinf(report.result.ci99_mean)
    assert math.isinf(report.result.ci99_p)
    assert report.passed  # an infinite interval covers everything


def test_poisson_identity_between_estimates(transformative_opp):
    result = simulate(MCConfig(transformative_opp, trials=200_000, seed=11))
    implied = 1.0 - math.exp(-result.mean_undetected)
    # both estimates target the same law; allow joint sampling error
    tol = 3.0 * (result.ci99_p + result.ci99_mean) / 2.5758
    assert abs(result.p_at_least_one - implied) < tol


def test_doubling_trials_shrinks_ci_by_sqrt2(transformative_opp):
    small = simulate(MCConfig(transformative_opp, trials=50_000, seed=5))
    big = simulate(MCConfig(transformative_opp, trials=100_000, seed=5))
    for narrow, wide in ((big.ci99_mean, small.ci99_mean), (big.ci99_p, small.ci99_p)):
        ratio = wide / narrow
        assert ratio == pytest.approx(math.sqrt(2.0), rel=0.15)


def test_insufficient_thinning_bound_is_rejected(transformative_opp):
    cfg = MCConfig(transformative_opp, trials=100, seed=0, max_rate=0.05)
    with pytest.raises(ValueError):
        simulate(cfg)


def test_custom_bound_above_peak_is_unbiased(limited_base):
    loose = simulate(MCConfig(limited_base, trials=100_000, seed=2, max_rate=0.5))
    analytic = cumulative_risk(limited_base)
    assert abs(loose.mean_undetected - analytic) <= loose.ci99_mean


def test_trials_must_be_positive(limited_base):
    with pytest.raises(ValueError):
        MCConfig(limited_base, trials=0, seed=0)


def test_validation_exposes_breakout_probability(limited_base):
    report = validate("transformative/baseline/opp", trials=50_000, seed=0)
    assert report.analytic_p == pytest.approx(breakout_prob(report.analytic_r), abs=1e-12)
    assert report.analytic_p == pytest.approx(0.763, abs=0.01)
