"""One-at-a-time sensitivity sweeps, elasticities, detection-curve families,
and uncertainty-band envelopes.

The default sweep grids cover the six calibrated parameters around the
standard vector (p_max=120, pi0=0.10, eta=3, beta=0.10, kappa=0.40, tau=40);
each regime's sweep base is its opportunistic baseline-detection preset.
Grid points are independent and evaluated in a deterministic order.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

from .model import (
    DetSchedule,
    ModelParams,
    cumulative_risk,
    detection_prob,
    pet_capability,
    relative_advantage,
)
from .scenarios import ScenarioSpec, build_preset

__all__ = [
    "DEFAULT_GRIDS",
    "SweepGrid",
    "SweepPoint",
    "SweepResult",
    "ThetaCurve",
    "BandSpec",
    "BandEnvelope",
    "oat_sweep",
    "sweep_csv",
    "arc_elasticity",
    "rai_shift_sensitivity",
    "detection_theta_curve",
    "uncertainty_band",
]

# Robustness grids for the six calibrated parameters.
DEFAULT_GRIDS: dict[str, tuple[float, ...]] = {
    "p_max": (100.0, 110.0, 120.0, 130.0, 140.0),
    "pi0": (0.05, 0.10, 0.15, 0.20),
    "eta": (1.0, 2.0, 3.0, 4.0, 5.0),
    "beta": (0.05, 0.08, 0.10, 0.12, 0.15),
    "kappa": (0.25, 0.33, 0.40, 0.50, 0.60),
    "tau": (20.0, 30.0, 40.0, 50.0, 60.0),
}

_ALL_REGIMES = ("limited", "disruptive", "transformative")


def _sweep_base(regime: str) -> ModelParams:
    # Opportunism on: the calibration vector the grids are centred on.
    return build_preset(ScenarioSpec(regime, "baseline", True))


@dataclass(frozen=True)
class SweepGrid:
    """A one-parameter sweep: which knob, which values, which regimes.

    ``base`` optionally fixes the non-regime parameters; the growth rate is
    still taken per regime.  Values outside the documented grid range are
    allowed but provoke a warning.
    """

    parameter: str
    values: Optional[tuple[float, ...]] = None
    regimes: tuple[str, ...] = _ALL_REGIMES
    base: Optional[ModelParams] = None

    def __post_init__(self):
        if self.parameter not in DEFAULT_GRIDS:
            raise ValueError(
                f"unknown sweep parameter {self.parameter!r}; "
                f"valid parameters: {', '.join(DEFAULT_GRIDS)}"
            )
        if self.values is not None:
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def grid_values(self) -> tuple[float, ...]:
        return self.values if self.values is not None else DEFAULT_GRIDS[self.parameter]


@dataclass(frozen=True)
class SweepPoint:
    parameter: str
    value: float
    regime: str
    r10: float


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    points: tuple[SweepPoint, ...]

    def surface(self) -> dict[tuple[float, str], float]:
        return {(p.value, p.regime): p.r10 for p in self.points}


def oat_sweep(grid: SweepGrid) -> SweepResult:
    """Ten-year risk at every (value, regime) grid point."""
    lo, hi = min(DEFAULT_GRIDS[grid.parameter]), max(DEFAULT_GRIDS[grid.parameter])
    points = []
    for value in grid.grid_values():
        if not lo <= value <= hi:
            warnings.warn(
                f"{grid.parameter}={value:g} lies outside the documented "
                f"range [{lo:g}, {hi:g}]",
                stacklevel=2,
            )
        for regime in grid.regimes:
            base = grid.base if grid.base is not None else _sweep_base(regime)
            params = base.with_(g_p=_sweep_base(regime).g_p, **{grid.parameter: value})
            points.append(SweepPoint(grid.parameter, value, regime, cumulative_risk(params)))
    return SweepResult(grid.parameter, tuple(points))


def sweep_csv(result: SweepResult, precision: int = 6) -> str:
    lines = ["parameter,value,regime,r10"]
    for p in result.points:
        lines.append(f"{p.parameter},{p.value:g},{p.regime},{round(p.r10, precision)}")
    return "\n".join(lines) + "\n"


def arc_elasticity(parameter: str, lo: float, hi: float, base: ModelParams) -> float:
    """Arc elasticity of ten-year risk between two parameter extremes.

    ``[R(hi) - R(lo)] / R(base) * base_value / (hi - lo)``.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    base_value = getattr(base, parameter)
    r_base = cumulative_risk(base)
    if r_base == 0.0:
        raise ValueError("elasticity undefined: risk at the base point is zero")
    r_lo = cumulative_risk(base.with_(**{parameter: lo}))
    r_hi = cumulative_risk(base.with_(**{parameter: hi}))
    return (r_hi - r_lo) / r_base * base_value / (hi - lo)


def rai_shift_sensitivity(spec_or_params, shift: float) -> float:
    """Relative risk change from a sustained advantage shift.

    The advantage path is displaced by ``shift`` capability points inside
    both the detection curve and the hazard before re-integrating.
    """
    if not np.isfinite(shift):
        raise ValueError("shift must be finite")
    params = (
        spec_or_params
        if isinstance(spec_or_params, ModelParams)
        else build_preset(spec_or_params)
    )
    r_base = cumulative_risk(params)
    if r_base == 0.0:
        raise ValueError("relative change undefined: baseline risk is zero")
    shifted = cumulative_risk(
        params, rai_fn=lambda t: relative_advantage(t, params) + shift
    )
    return (shifted - r_base) / r_base


@dataclass(frozen=True)
class ThetaCurve:
    """One detection curve: probability against advantage for a fixed
    intercept, with its inflection point."""

    theta: float
    inflection_rai: float
    pr_at_inflection: float
    rai: np.ndarray
    pr: np.ndarray


def detection_theta_curve(
    theta_values: Sequence[float],
    kappa: float = 0.4,
    pi0: float = 0.10,
    rai_grid: Optional[np.ndarray] = None,
) -> tuple[ThetaCurve, ...]:
    """Family of detection curves over the intercept parameter.

    Each curve inflects at ``rai = -theta/kappa`` where the probability is
    ``pi0 + (1 - pi0)/2``.
    """
    if kappa <= 0:
        raise ValueError("detection slope must be positive")
    grid = np.linspace(-100.0, 100.0, 401) if rai_grid is None else np.asarray(rai_grid, float)
    curves = []
    for theta in theta_values:
        pr = detection_prob(grid, kappa, theta, pi0, floor="blend")
        curves.append(
            ThetaCurve(
                theta=float(theta),
                inflection_rai=-float(theta) / kappa,
                pr_at_inflection=pi0 + (1.0 - pi0) / 2.0,
                rai=grid,
                pr=np.asarray(pr),
            )
        )
    return tuple(curves)


@dataclass(frozen=True)
class BandSpec:
    """Ensemble definition for uncertainty bands.

    Defaults vary the detection upgrade timing by +/-1 year and the upgrade
    magnitudes by +/-20%; ``parameter_grids`` adds plain parameter
    variations.  The band is the pointwise min/max envelope over the full
    Cartesian ensemble.
    """

    step_time_offsets: tuple[float, ...] = (-1.0, 0.0, 1.0)
    step_scale_factors: tuple[float, ...] = (0.8, 1.0, 1.2)
    parameter_grids: Optional[Mapping[str, Sequence[float]]] = None
    resolution: int = 40


@dataclass(frozen=True)
class BandEnvelope:
    """Pointwise envelopes; each field maps to (lower, nominal, upper)."""

    t: np.ndarray
    fields: dict

    def width(self, name: str) -> np.ndarray:
        lo, _, hi = self.fields[name]
        return hi - lo


def _shift_schedule(sched: DetSchedule, offset: float, scale: float) -> DetSchedule:
    steps = []
    floor = 1e-9
    for t, d in sched.steps:
        t_new = max(t + offset, floor)
        floor = t_new + 1e-9  # keep strictly increasing after clamping
        steps.append((t_new, d * scale))
    return DetSchedule(sched.d0, tuple(steps))


def _member_params(base: ModelParams, offset, scale, extra: Mapping) -> ModelParams:
    params = base.with_(det_schedule=_shift_schedule(base.det_schedule, offset, scale))
    if extra:
        params = params.with_(**dict(extra))
    return params


def _risk_series(params: ModelParams, grid: np.ndarray) -> np.ndarray:
    """Running risk integral evaluated at the grid times."""
    from .model import _make_integrand, _running_integral  # internal reuse

    merged = np.union1d(grid, [t for t in params.det_schedule.times if 0 < t < params.horizon])
    cum = _running_integral(_make_integrand(params), merged)
    idx = np.searchsorted(merged, grid)
    return cum[idx]


def uncertainty_band(spec_or_params, band: BandSpec = BandSpec()) -> BandEnvelope:
    """Min/max envelopes for capability, detection, advantage and risk.

    The nominal run (zero offset, unit scale, base parameters) is always a
    member, so it lies within the band pointwise by construction.
    """
    base = (
        spec_or_params
        if isinstance(spec_or_params, ModelParams)
        else build_preset(spec_or_params)
    )
    grid = np.linspace(0.0, base.horizon, max(2, int(band.resolution * base.horizon) + 1))

    extra_names = list(band.parameter_grids) if band.parameter_grids else []
    extra_values = [tuple(band.parameter_grids[n]) for n in extra_names]

    members = []
    nominal_arrays = None
    for offset in band.step_time_offsets or (0.0,):
        for scale in band.step_scale_factors or (1.0,):
            for combo in itertools.product(*extra_values) if extra_values else [()]:
                extra = dict(zip(extra_names, combo))
                params = _member_params(base, offset, scale, extra)
                p = np.asarray(pet_capability(grid, params))
                d = np.asarray(params.det_schedule.level(grid))
                arrays = {
                    "p": p,
                    "d": d,
                    "rai": p - d,
                    "cumulative_risk": _risk_series(params, grid),
                }
                members.append(arrays)
                is_nominal = offset == 0.0 and scale == 1.0 and not any(
                    getattr(base, k) != v for k, v in extra.items()
                )
                if is_nominal and nominal_arrays is None:
                    nominal_arrays = arrays
    if nominal_arrays is None:
        p = np.asarray(pet_capability(grid, base))
        d = np.asarray(base.det_schedule.level(grid))
        nominal_arrays = {
            "p": p,
            "d": d,
            "rai": p - d,
            "cumulative_risk": _risk_series(base, grid),
        }
        members.append(nominal_arrays)

    fields = {}
    for name in ("p", "d", "rai", "cumulative_risk"):
        stack = np.vstack([m[name] for m in members])
        fields[name] = (stack.min(axis=0), nominal_arrays[name], stack.max(axis=0))
    return BandEnvelope(grid, fields)
