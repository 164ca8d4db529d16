"""Named scenario presets, scenario execution, and the summary tables.

Twelve presets cover the cross of three concealment growth regimes
(limited / disruptive / transformative), two detection investment packages
(baseline / moonshot) and an opportunism toggle.  Preset names follow
``"<regime>/<det>/<opp>"``, e.g. ``"disruptive/baseline/no-opp"``.

Preset definitions live in a JSON catalog shipped with the package
(``presets.json``); set the ``TECHRACE_PRESETS`` environment variable to
point at an alternative catalog file.

Two summary tables are provided:

* ``table4`` — risk and probability with percent changes relative to each
  growth regime's own plain baseline (no moonshot, no opportunism).
* ``table5`` — risk, probability and the relative change ``epsilon_r``
  against the disruptive plain baseline.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Optional

from .model import (
    DetSchedule,
    ModelParams,
    breakout_prob,
    crossing_times,
    cumulative_risk,
    pet_capability,
)

__all__ = [
    "ScenarioSpec",
    "RiskSummary",
    "TableReport",
    "WalkthroughStep",
    "PRESETS_ENV_VAR",
    "TRANSFORMATIVE_GROWTH_PRECISE",
    "preset_names",
    "build_preset",
    "display_name",
    "run_scenario",
    "table",
    "table_csv",
    "walkthrough",
]

PRESETS_ENV_VAR = "TECHRACE_PRESETS"

# The transformative regime's growth rate carries an extra digit in some
# calibrations; the preset uses the two-decimal value, this one is available
# for overrides.
TRANSFORMATIVE_GROWTH_PRECISE = 1.189

_REGIME_ORDER = ("limited", "disruptive", "transformative")
_DET_ORDER = ("baseline", "moonshot")
_OPP_ORDER = ("no-opp", "opp")

# Row order of the two summary tables within each regime block.
_TABLE4_VARIANTS = (("baseline", False), ("moonshot", False), ("baseline", True), ("moonshot", True))
_TABLE5_VARIANTS = (("baseline", False), ("baseline", True), ("moonshot", False), ("moonshot", True))

TABLE4_COLUMNS = ("scenario", "r10", "p10", "delta_r_pct", "delta_p_pct")
TABLE5_COLUMNS = ("scenario", "r10", "p10", "epsilon_r")


def _default_catalog_path() -> Path:
    return Path(__file__).parent / "presets.json"


def _catalog_path(path: Optional[os.PathLike | str] = None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(PRESETS_ENV_VAR)
    if env:
        return Path(env)
    return _default_catalog_path()


@functools.lru_cache(maxsize=8)
def _load_catalog(path_str: str) -> dict:
    with open(path_str, "r", encoding="utf-8") as fh:
        catalog = json.load(fh)
    for key in ("base", "pet_regimes", "det_packages", "opportunism"):
        if key not in catalog:
            raise ValueError(f"preset catalog {path_str} is missing section {key!r}")
    return catalog


def catalog(path: Optional[os.PathLike | str] = None) -> dict:
    """The preset catalog (package default, env override, or explicit path)."""
    return _load_catalog(str(_catalog_path(path)))


@dataclass(frozen=True)
class ScenarioSpec:
    """A preset binding: growth regime, detection package, opportunism flag.

    ``overrides`` optionally substitutes individual parameters after the
    preset is assembled (keys are ``ModelParams`` field names, plus ``d0``
    and ``det_steps`` which rebuild the schedule).
    """

    pet_regime: str
    det_package: str
    opportunism: bool
    overrides: Optional[Mapping[str, object]] = None

    @property
    def name(self) -> str:
        opp = "opp" if self.opportunism else "no-opp"
        return f"{self.pet_regime}/{self.det_package}/{opp}"


def preset_names(path=None) -> list[str]:
    """All preset names, regime-major, in catalog order."""
    cat = catalog(path)
    return [
        f"{regime}/{det}/{opp}"
        for regime in cat["pet_regimes"]
        for det in cat["det_packages"]
        for opp in cat["opportunism"]
    ]


def parse_name(name: str, path=None) -> ScenarioSpec:
    cat = catalog(path)
    parts = name.split("/")
    valid = ", ".join(preset_names(path))
    if len(parts) != 3:
        raise LookupError(f"unknown preset {name!r}; valid presets: {valid}")
    regime, det, opp = parts
    if (
        regime not in cat["pet_regimes"]
        or det not in cat["det_packages"]
        or opp not in cat["opportunism"]
    ):
        raise LookupError(f"unknown preset {name!r}; valid presets: {valid}")
    return ScenarioSpec(regime, det, opp == "opp")


def _apply_overrides(params: ModelParams, overrides: Mapping[str, object]) -> ModelParams:
    changes = dict(overrides)
    d0 = changes.pop("d0", None)
    steps = changes.pop("det_steps", None)
    if d0 is not None or steps is not None:
        sched = params.det_schedule
        params = params.with_(
            det_schedule=DetSchedule(
                float(d0) if d0 is not None else sched.d0,
                tuple(tuple(s) for s in steps) if steps is not None else sched.steps,
            )
        )
    if changes:
        params = params.with_(**changes)
    return params


def build_preset(name_or_spec, path=None) -> ModelParams:
    """Fully populated parameters for a named preset.

    Raises ``LookupError`` listing the valid names when the preset is
    unknown.
    """
    spec = name_or_spec if isinstance(name_or_spec, ScenarioSpec) else parse_name(name_or_spec, path)
    cat = catalog(path)
    try:
        regime = cat["pet_regimes"][spec.pet_regime]
        det = cat["det_packages"][spec.det_package]
        eta = cat["opportunism"]["opp" if spec.opportunism else "no-opp"]
    except KeyError as exc:
        raise LookupError(
            f"unknown preset {spec.name!r}; valid presets: {', '.join(preset_names(path))}"
        ) from exc
    base = cat["base"]
    params = ModelParams(
        p0=base["p0"],
        g_p=regime["g_p"],
        p_max=base["p_max"],
        kappa=det["kappa"],
        theta=base["theta"],
        pi0=base["pi0"],
        lambda0=base["lambda0"],
        eta=eta,
        beta=base["beta"],
        tau=base["tau"],
        det_schedule=DetSchedule(base["d0"], tuple(tuple(s) for s in det["steps"])),
        horizon=base["horizon"],
        detection_floor=base.get("detection_floor", "clamp"),
    )
    if spec.overrides:
        params = _apply_overrides(params, spec.overrides)
    return params


def display_name(spec: ScenarioSpec, path=None) -> str:
    cat = catalog(path)
    label = cat["pet_regimes"][spec.pet_regime].get("display", spec.pet_regime.title())
    moonshot = spec.det_package == "moonshot"
    if moonshot and spec.opportunism:
        return f"{label} + Both"
    if moonshot:
        return f"{label} + Moonshot"
    if spec.opportunism:
        return f"{label} + Opportunistic"
    return label


@dataclass(frozen=True)
class RiskSummary:
    """Scenario outcome and its position relative to the reference rows.

    ``delta_r_pct``/``delta_p_pct`` are percent changes against the same
    regime's plain baseline; ``epsilon_r`` is the relative risk change
    against the disruptive plain baseline.  All values unrounded.
    """

    scenario: str
    display: str
    r10: float
    p10: float
    delta_r_pct: float
    delta_p_pct: float
    epsilon_r: float


def _plain_baseline(regime: str, path=None) -> ScenarioSpec:
    return ScenarioSpec(regime, "baseline", False)


@functools.lru_cache(maxsize=64)
def _risk_for(name: str, path_str: str) -> float:
    return cumulative_risk(build_preset(name, path_str if path_str else None))


def _risk(spec: ScenarioSpec, path=None) -> float:
    if spec.overrides:
        return cumulative_risk(build_preset(spec, path))
    return _risk_for(spec.name, str(_catalog_path(path)))


def run_scenario(spec_or_name, path=None) -> RiskSummary:
    """Evaluate a scenario and its deltas against the reference baselines."""
    spec = spec_or_name if isinstance(spec_or_name, ScenarioSpec) else parse_name(spec_or_name, path)
    r10 = _risk(spec, path)
    p10 = breakout_prob(r10)
    r_own = _risk(_plain_baseline(spec.pet_regime), path)
    p_own = breakout_prob(r_own)
    r_ref = _risk(_plain_baseline("disruptive"), path)
    return RiskSummary(
        scenario=spec.name,
        display=display_name(spec, path),
        r10=r10,
        p10=p10,
        delta_r_pct=100.0 * (r10 - r_own) / r_own,
        delta_p_pct=100.0 * (p10 - p_own) / p_own,
        epsilon_r=(r10 - r_ref) / r_ref,
    )


@dataclass(frozen=True)
class TableReport:
    """Rows of one summary table; ``rows`` keep full-precision values."""

    table_id: str
    columns: tuple[str, ...]
    rows: tuple[dict, ...]


def table(table_id: str, path=None) -> TableReport:
    """Build ``table4`` or ``table5`` across all twelve scenarios."""
    if table_id == "table4":
        variants, columns = _TABLE4_VARIANTS, TABLE4_COLUMNS
    elif table_id == "table5":
        variants, columns = _TABLE5_VARIANTS, TABLE5_COLUMNS
    else:
        raise ValueError(f"unknown table id {table_id!r}; valid ids: table4, table5")
    rows = []
    for regime in _REGIME_ORDER:
        for det, opp in variants:
            summary = run_scenario(ScenarioSpec(regime, det, opp), path)
            row = {
                "scenario": summary.display,
                "preset": summary.scenario,
                "r10": summary.r10,
                "p10": summary.p10,
                "delta_r_pct": summary.delta_r_pct,
                "delta_p_pct": summary.delta_p_pct,
                "epsilon_r": summary.epsilon_r,
            }
            rows.append(row)
    return TableReport(table_id, columns, tuple(rows))


def _format_cell(column: str, value, precision: int) -> str:
    if column == "scenario":
        return str(value)
    if column in ("delta_r_pct", "delta_p_pct"):
        # Percent changes are reported as integers; raw values stay in rows.
        return str(int(round(value)))
    return f"{round(float(value), precision):.{precision}f}"


def table_csv(report: TableReport, precision: int = 3) -> str:
    """Render a table as CSV (header row mandatory, half-even rounding)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_format_cell(c, row[c], precision) for c in report.columns])
    return buf.getvalue()


@dataclass(frozen=True)
class WalkthroughStep:
    index: int
    title: str
    values: dict


def walkthrough(path=None) -> list[WalkthroughStep]:
    """Worked baseline-to-moonshot comparison for the limited regime.

    Six steps: the concealment path, the detection path, the advantage
    crossing, risk under the baseline schedule, the accelerated schedule,
    and risk under it with the percent change.
    """
    base = build_preset("limited/baseline/no-opp", path)
    moon = build_preset("limited/moonshot/no-opp", path)

    crossing_base = crossing_times(base)
    r_base = cumulative_risk(base)
    r_moon = cumulative_risk(moon)
    crossing_moon = crossing_times(moon)

    def schedule_text(params: ModelParams) -> str:
        sched = params.det_schedule
        parts = [f"{sched.d0:g}"]
        level = sched.d0
        for t, delta in sched.steps:
            level += delta
            parts.append(f"{level:g} from t={t:g}")
        return " -> ".join(parts)

    return [
        WalkthroughStep(
            1,
            "Concealment path",
            {
                "g_p": base.g_p,
                "p0": base.p0,
                "p_max": base.p_max,
                "p_at_horizon": pet_capability(base.horizon, base),
            },
        ),
        WalkthroughStep(2, "Detection path", {"schedule": schedule_text(base)}),
        WalkthroughStep(
            3,
            "Advantage crossing",
            {"t_star": crossing_base.first_persistent},
        ),
        WalkthroughStep(
            4,
            "Risk under the baseline schedule",
            {"r10": r_base, "p10": breakout_prob(r_base)},
        ),
        WalkthroughStep(
            5,
            "Accelerated detection package",
            {"schedule": schedule_text(moon), "kappa": moon.kappa},
        ),
        WalkthroughStep(
            6,
            "Risk under the accelerated package",
            {
                "r10": r_moon,
                "p10": breakout_prob(r_moon),
                "delta_r_pct": 100.0 * (r_moon - r_base) / r_base,
                "crossing": crossing_moon.first_persistent,
            },
        ),
    ]
