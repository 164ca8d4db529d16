"""Core evaluation of the concealment/detection technology-race model.

The model tracks two capability indices over a planning horizon of ``T``
years:

* ``P(t)`` — concealment-enabling capability of a would-be proliferator,
  growing along a logistic curve from ``p0`` toward the ceiling ``p_max``
  with rate ``g_p``.
* ``D(t)`` — detection capability of the monitoring regime, a
  right-continuous step function: a base level plus scheduled upgrades.

Their difference ``RAI(t) = P(t) - D(t)`` (relative advantage index) drives
two probabilities:

* detection probability, a decreasing logistic in RAI with slope ``kappa``,
  intercept ``theta`` and a residual floor ``pi0``;
* an attempt hazard ``lambda(t)`` that starts at ``lambda0`` per year and
  rises sigmoidally by up to a factor ``1 + eta`` once RAI exceeds the
  opportunism threshold ``tau``.

Cumulative risk is the expected number of undetected breakout attempts,

    R(T) = integral over [0, T] of  lambda(RAI(t)) * (1 - Pr_detect(RAI(t)))

and ``P(T) = 1 - exp(-R(T))`` is the probability of at least one undetected
attempt under the Poisson arrival assumption.

Two conventions deserve a note because both appear in the wild and they
differ at the second decimal of risk:

* The detection floor can be applied as a hard clamp,
  ``max(pi0, logistic)``, which keeps detection at exactly 50% when the two
  indices are level, or as a smooth blend, ``pi0 + (1 - pi0) * logistic``,
  which is strictly decreasing everywhere.  ``ModelParams.detection_floor``
  selects the convention; the shipped presets use ``"clamp"``, which is the
  calibration the bundled reference tables were produced with.
* The opportunism boost uses a base-10 logistic: the odds of the boost grow
  by a factor of ten per ``1/beta`` capability points.  ``sigma10(x) =
  1 / (1 + 10**-x)`` with ``x = beta * (RAI - tau)``.

All functions are pure; everything here is safe for unrestricted concurrent
use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

__all__ = [
    "DetSchedule",
    "ModelParams",
    "Trajectory",
    "CrossingReport",
    "BoundEstimate",
    "pet_capability",
    "det_capability",
    "relative_advantage",
    "detection_prob",
    "hazard_rate",
    "cumulative_risk",
    "breakout_prob",
    "crossing_times",
    "risk_bounds",
    "sample_trajectory",
    "peak_hazard_rate",
]

_LN10 = math.log(10.0)
# Per-segment absolute quadrature tolerance; with at most a handful of
# segments the total error stays well under 1e-8.
_QUAD_EPSABS = 1e-10
_QUAD_LIMIT = 200

# 5-point Gauss-Legendre rule, used for the vectorised running integral in
# sample_trajectory (the integrand is smooth inside every grid interval).
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)

BLEND = "blend"
CLAMP = "clamp"
_FLOOR_MODES = (BLEND, CLAMP)


def _sigmoid(x):
    """Numerically stable standard logistic, elementwise."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _scalar_like(value, reference) -> float | np.ndarray:
    if np.ndim(reference) == 0:
        return float(value)
    return value


@dataclass(frozen=True)
class DetSchedule:
    """Stepwise detection-capability plan: base level plus timed upgrades.

    ``steps`` is an ordered sequence of ``(time, delta)`` pairs.  Upgrades
    are right-continuous: the new level applies at exactly the step time.
    """

    d0: float
    steps: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "steps", tuple((float(t), float(d)) for t, d in self.steps)
        )
        if not self.d0 > 0:
            raise ValueError(f"base detection level must be positive, got {self.d0}")
        last = 0.0
        for t, d in self.steps:
            if t <= last:
                raise ValueError("step times must be strictly increasing and > 0")
            if d <= 0:
                raise ValueError(f"step deltas must be positive, got {d}")
            last = t

    @property
    def times(self) -> tuple[float, ...]:
        return tuple(t for t, _ in self.steps)

    def level(self, t):
        """Detection level at time ``t`` (right-continuous)."""
        t_arr = np.asarray(t, dtype=float)
        if np.any(t_arr < 0):
            raise ValueError("time must be non-negative")
        cum = np.concatenate([[0.0], np.cumsum([d for _, d in self.steps])])
        idx = np.searchsorted(self.times, t_arr, side="right")
        return _scalar_like(self.d0 + cum[idx], t)

    def level_before(self, t: float) -> float:
        """Left limit of the level at ``t`` (the value just before a step)."""
        cum = np.concatenate([[0.0], np.cumsum([d for _, d in self.steps])])
        idx = int(np.searchsorted(self.times, float(t), side="left"))
        return float(self.d0 + cum[idx])

    def breakpoints(self, horizon: float) -> list[float]:
        """``[0, interior step times..., horizon]`` for piecewise work."""
        inner = [t for t in self.times if 0.0 < t < horizon]
        return [0.0, *inner, float(horizon)]


def _default_schedule() -> DetSchedule:
    return DetSchedule(50.0, ((3.0, 5.0), (7.0, 4.0)))


@dataclass(frozen=True)
class ModelParams:
    """Full parameter vector of the race model.

    Defaults follow the standard calibration: indices start at ``p0=20`` vs
    ``d0=50`` (through the schedule), the concealment ceiling is 120, the
    detection logistic has slope 0.4 and floor 0.10, and the baseline attempt
    hazard is 0.05 per year.  ``eta=0`` disables opportunism; the presets use
    ``eta=3`` for opportunistic variants.

    ``kappa_early``/``kappa_switch`` optionally stage the detection slope:
    ``kappa_early`` applies before ``kappa_switch`` and ``kappa`` afterwards.
    The presets keep a constant slope; the staged reading differs by less
    than 1e-6 in ten-year risk because detection is near-certain early on.
    """

    p0: float = 20.0
    g_p: float = 0.23
    p_max: float = 120.0
    kappa: float = 0.4
    theta: float = 0.0
    pi0: float = 0.10
    lambda0: float = 0.05
    eta: float = 0.0
    beta: float = 0.10
    tau: float = 40.0
    det_schedule: DetSchedule = field(default_factory=_default_schedule)
    horizon: float = 10.0
    detection_floor: str = CLAMP
    kappa_early: Optional[float] = None
    kappa_switch: float = 0.0

    def __post_init__(self):
        if not 0 < self.p0 < self.p_max:
            raise ValueError(f"need 0 < p0 < p_max, got p0={self.p0}, p_max={self.p_max}")
        if self.g_p <= 0:
            raise ValueError(f"growth rate must be positive, got {self.g_p}")
        if self.kappa <= 0:
            raise ValueError(f"detection slope must be positive, got {self.kappa}")
        if self.beta <= 0:
            raise ValueError(f"opportunism slope must be positive, got {self.beta}")
        if not 0 <= self.pi0 <= 1:
            raise ValueError(f"detection floor must lie in [0, 1], got {self.pi0}")
        if self.lambda0 < 0:
            raise ValueError(f"baseline hazard must be non-negative, got {self.lambda0}")
        if self.eta < 0:
            raise ValueError(f"opportunism boost must be non-negative, got {self.eta}")
        if self.horizon <= 0:
            raise ValueError(f"horizon must be positive, got {self.horizon}")
        if self.detection_floor not in _FLOOR_MODES:
            raise ValueError(f"detection_floor must be one of {_FLOOR_MODES}")
        if self.kappa_early is not None and self.kappa_early <= 0:
            raise ValueError("staged detection slope must be positive")

    @property
    def d0(self) -> float:
        """Initial detection level (delegates to the schedule)."""
        return self.det_schedule.d0

    def kappa_at(self, t):
        """Detection slope at time ``t`` (constant unless staged)."""
        if self.kappa_early is None:
            return _scalar_like(np.full_like(np.asarray(t, dtype=float), self.kappa), t)
        t_arr = np.asarray(t, dtype=float)
        return _scalar_like(
            np.where(t_arr < self.kappa_switch, self.kappa_early, self.kappa), t
        )

    def with_(self, **changes) -> "ModelParams":
        """``dataclasses.replace`` convenience."""
        return replace(self, **changes)

    def breakpoints(self) -> list[float]:
        """Segment boundaries of the integrand on [0, horizon]."""
        pts = self.det_schedule.breakpoints(self.horizon)
        if self.kappa_early is not None and 0.0 < self.kappa_switch < self.horizon:
            pts = sorted(set(pts) | {float(self.kappa_switch)})
        return pts


def pet_capability(t, params: ModelParams):
    """Concealment capability ``P(t)``: logistic growth toward ``p_max``.

    Strictly increasing in ``t``, bounded above by ``p_max``; for very large
    ceilings it reduces to plain exponential growth ``p0 * exp(g_p t)``.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("time must be non-negative")
    ratio = params.p_max / params.p0 - 1.0
    return _scalar_like(params.p_max / (1.0 + ratio * np.exp(-params.g_p * t_arr)), t)


def det_capability(t, schedule: DetSchedule):
    """Detection capability ``D(t)`` under the given upgrade schedule."""
    return schedule.level(t)


def relative_advantage(t, params: ModelParams):
    """``RAI(t) = P(t) - D(t)``; positive values favour the proliferator."""
    return pet_capability(t, params) - det_capability(t, params.det_schedule)


def detection_prob(rai, kappa=0.4, theta=0.0, pi0=0.10, floor=BLEND):
    """Probability that activity at advantage ``rai`` is detected.

    The core curve is ``1 / (1 + exp(kappa * rai + theta))``, decreasing in
    ``rai``.  ``floor`` fixes how the residual floor ``pi0`` enters:

    * ``"blend"`` — ``pi0 + (1 - pi0) * curve``; strictly decreasing, equals
      ``pi0 + (1 - pi0)/2`` at the curve midpoint.
    * ``"clamp"`` — ``max(pi0, curve)``; equals the bare curve until it
      would dip below the floor (exactly 0.5 at ``rai = -theta/kappa``).

    Extreme arguments saturate cleanly at the limits ``1`` and ``pi0``.
    """
    if kappa is not None and np.any(np.asarray(kappa) <= 0):
        raise ValueError("detection slope must be positive")
    if not 0 <= pi0 <= 1:
        raise ValueError("detection floor must lie in [0, 1]")
    if floor not in _FLOOR_MODES:
        raise ValueError(f"floor must be one of {_FLOOR_MODES}")
    z = np.asarray(kappa, dtype=float) * np.asarray(rai, dtype=float) + theta
    curve = _sigmoid(-z)
    if floor == BLEND:
        out = pi0 + (1.0 - pi0) * curve
    else:
        out = np.maximum(pi0, curve)
    return _scalar_like(out, rai)


def hazard_rate(rai, lambda0=0.05, eta=0.0, beta=0.10, tau=40.0):
    """Breakout-attempt rate at advantage ``rai`` (per year).

    ``lambda0 * (1 + eta * boost)`` where the boost is a base-10 logistic in
    ``beta * (rai - tau)``: one more decade of odds per ``1/beta`` capability
    points above the threshold.  Non-decreasing in ``rai``, bounded by
    ``lambda0`` and ``lambda0 * (1 + eta)``.
    """
    if lambda0 < 0:
        raise ValueError("baseline hazard must be non-negative")
    boost = _sigmoid(_LN10 * beta * (np.asarray(rai, dtype=float) - tau))
    return _scalar_like(lambda0 * (1.0 + eta * boost), rai)


def _make_integrand(
    params: ModelParams, rai_fn: Optional[Callable] = None
) -> Callable:
    """Pointwise risk integrand ``lambda(RAI(t)) * (1 - Pr_detect(RAI(t)))``.

    ``rai_fn`` substitutes an arbitrary advantage path for the model's own
    (used for shifted and synthetic constant-advantage evaluations); it must
    accept numpy arrays.
    """
    if rai_fn is None:
        rai_fn = lambda t: relative_advantage(t, params)  # noqa: E731

    def integrand(t):
        r = np.asarray(rai_fn(t), dtype=float)
        pr = detection_prob(
            r, params.kappa_at(t), params.theta, params.pi0, params.detection_floor
        )
        lam = hazard_rate(r, params.lambda0, params.eta, params.beta, params.tau)
        return lam * (1.0 - pr)

    return integrand


def cumulative_risk(params: ModelParams, rai_fn: Optional[Callable] = None) -> float:
    """Expected undetected attempts ``R(T)`` over ``[0, horizon]``.

    Adaptive quadrature on each inter-step segment (the integrand is smooth
    between detection upgrades and jumps at them); total absolute error is
    kept below 1e-8.
    """
    f = _make_integrand(params, rai_fn)
    pts = params.breakpoints()
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        val, _ = quad(f, a, b, epsabs=_QUAD_EPSABS, limit=_QUAD_LIMIT)
        total += val
    if not math.isfinite(total):
        raise ArithmeticError("risk integrand produced a non-finite value")
    return total


def breakout_prob(r: float) -> float:
    """``1 - exp(-r)``: probability of at least one undetected attempt."""
    if r < 0:
        raise ValueError(f"expected count must be non-negative, got {r}")
    return -math.expm1(-r)


@dataclass(frozen=True)
class CrossingReport:
    """Sign structure of the advantage index over the horizon.

    ``sign_changes`` lists every time RAI changes sign (upgrade instants can
    flip it down, smooth growth flips it up).  ``first_persistent`` is the
    earliest time after which RAI stays non-negative through the horizon,
    or ``None`` if the index ends negative.
    """

    sign_changes: tuple[float, ...]
    first_persistent: Optional[float]


def crossing_times(params: ModelParams) -> CrossingReport:
    """Locate all RAI sign changes and the first persistent crossing.

    Within a segment the index is strictly increasing (concealment grows,
    detection is flat), so each segment holds at most one upward root;
    upgrades can only push the sign back down.
    """
    sched = params.det_schedule
    pts = sched.breakpoints(params.horizon)
    changes: list[float] = []
    upward: list[bool] = []
    prev_left_limit: Optional[float] = None
    for a, b in zip(pts[:-1], pts[1:]):
        level = sched.level(a)

        def f(t, level=level):
            return pet_capability(t, params) - level

        ra, rb = f(a), f(b)
        if prev_left_limit is None:
            if ra == 0.0:
                changes.append(0.0)
                upward.append(True)
        else:
            if (prev_left_limit >= 0.0) != (ra >= 0.0):
                changes.append(a)
                upward.append(ra >= 0.0)
        if (ra >= 0.0) != (rb >= 0.0):
            root = brentq(f, a, b, xtol=1e-12, rtol=8.9e-16)
            changes.append(float(root))
            upward.append(rb >= 0.0)
        prev_left_limit = rb

    final_rai = relative_advantage(params.horizon, params)
    if final_rai < 0.0:
        persistent = None
    else:
        ups = [c for c, up in zip(changes, upward) if up]
        persistent = max(ups) if ups else 0.0
    return CrossingReport(tuple(changes), persistent)


@dataclass(frozen=True)
class BoundEstimate:
    """Two-sided bound on ``R(T)`` for paths held at least ``delta`` above
    the opportunism threshold.

    ``epsilon`` is the sigmoid slack ``exp(-beta*delta) / (1 +
    exp(-beta*delta))`` and ``zeta`` the detection slack ``(1 - pi0) *
    exp(-kappa*(tau + delta))``; both decay exponentially in ``delta``,
    collapsing the bounds onto ``lambda0 * (1 + eta) * (1 - pi0) * T``.
    """

    lower: float
    upper: float
    epsilon: float
    zeta: float


def risk_bounds(params: ModelParams, delta: float) -> BoundEstimate:
    """Bound ``R(T)`` assuming ``RAI(t) >= tau + delta`` throughout.

    The caller is responsible for the assumption; the bounds are exercised
    against synthetic constant-advantage paths.  A degenerate lower bound
    (floor plus slack exceeding one) clamps at zero.
    """
    if delta <= 0:
        raise ValueError(f"margin must be positive, got {delta}")
    bd = params.beta * delta
    eps = math.exp(-bd) / (1.0 + math.exp(-bd))
    zeta = (1.0 - params.pi0) * math.exp(-params.kappa * (params.tau + delta))
    t = params.horizon
    lower = params.lambda0 * (1.0 + params.eta * (1.0 - eps)) * (1.0 - params.pi0 - zeta) * t
    upper = params.lambda0 * (1.0 + params.eta) * (1.0 - params.pi0) * t
    return BoundEstimate(max(0.0, lower), upper, eps, zeta)


@dataclass(frozen=True)
class Trajectory:
    """Time-sampled model state.

    The grid contains the horizon endpoints, the regular samples, and every
    upgrade time twice: once carrying the pre-step detection level (left
    limit) and once the post-step level, so plots show the jump faithfully.
    ``cumulative_risk`` is the running value of the risk integral and is
    continuous through the steps.
    """

    grid: np.ndarray
    p: np.ndarray
    d: np.ndarray
    rai: np.ndarray
    pr_detect: np.ndarray
    hazard: np.ndarray
    integrand: np.ndarray
    cumulative_risk: np.ndarray

    FIELDS = ("t", "p", "d", "rai", "pr_detect", "hazard", "integrand", "cumulative_risk")

    @property
    def final_risk(self) -> float:
        return float(self.cumulative_risk[-1])

    def rows(self):
        for i in range(len(self.grid)):
            yield (
                float(self.grid[i]),
                float(self.p[i]),
                float(self.d[i]),
                float(self.rai[i]),
                float(self.pr_detect[i]),
                float(self.hazard[i]),
                float(self.integrand[i]),
                float(self.cumulative_risk[i]),
            )

    def series(self) -> dict[str, list[float]]:
        return {
            "t": self.grid.tolist(),
            "p": self.p.tolist(),
            "d": self.d.tolist(),
            "rai": self.rai.tolist(),
            "pr_detect": self.pr_detect.tolist(),
            "hazard": self.hazard.tolist(),
            "cumulative_r": self.cumulative_risk.tolist(),
        }


def _running_integral(fn: Callable, times: np.ndarray) -> np.ndarray:
    """Cumulative integral of ``fn`` over consecutive intervals (vectorised
    5-point Gauss-Legendre; exact enough for smooth integrands on a dense
    grid)."""
    t0, t1 = times[:-1], times[1:]
    h = (t1 - t0) / 2.0
    mid = (t0 + t1) / 2.0
    nodes = mid[:, None] + h[:, None] * _GL_NODES[None, :]
    vals = np.asarray(fn(nodes.ravel()), dtype=float).reshape(nodes.shape)
    increments = h * (vals @ _GL_WEIGHTS)
    return np.concatenate([[0.0], np.cumsum(increments)])


def sample_trajectory(params: ModelParams, resolution: int = 100) -> Trajectory:
    """Sample the model on a regular grid plus both sides of every upgrade.

    ``resolution`` is samples per year (at least 1).  The final running-risk
    value agrees with :func:`cumulative_risk` to well within 1e-6.
    """
    if resolution < 1:
        raise ValueError(f"resolution must be at least 1, got {resolution}")
    T = params.horizon
    sched = params.det_schedule
    n = int(round(resolution * T)) + 1
    base = np.linspace(0.0, T, max(n, 2))
    inner_steps = [t for t in sched.times if 0.0 < t < T]
    distinct = np.union1d(base, np.asarray(inner_steps, dtype=float))

    times: list[float] = []
    d_vals: list[float] = []
    step_set = set(inner_steps)
    for t in distinct:
        t = float(t)
        if t in step_set:
            times.append(t)
            d_vals.append(sched.level_before(t))
        times.append(t)
        d_vals.append(float(sched.level(t)))
    grid = np.asarray(times)
    d = np.asarray(d_vals)

    p = pet_capability(grid, params)
    rai = p - d
    kap = np.asarray(params.kappa_at(grid), dtype=float)
    pr = detection_prob(rai, kap, params.theta, params.pi0, params.detection_floor)
    hz = hazard_rate(rai, params.lambda0, params.eta, params.beta, params.tau)
    integrand = hz * (1.0 - pr)

    cum_distinct = _running_integral(_make_integrand(params), distinct)
    by_time = dict(zip((float(t) for t in distinct), cum_distinct))
    cum = np.asarray([by_time[t] for t in times])

    return Trajectory(grid, p, d, rai, pr, hz, integrand, cum)


def peak_hazard_rate(params: ModelParams) -> float:
    """Supremum of the attempt hazard over the horizon.

    The hazard is non-decreasing in RAI and RAI rises within each inter-step
    segment, so the supremum is attained at a segment's right edge (taking
    the segment's own detection level).
    """
    sched = params.det_schedule
    pts = sched.breakpoints(params.horizon)
    peak = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        r_end = pet_capability(b, params) - sched.level(a)
        peak = max(
            peak,
            float(hazard_rate(r_end, params.lambda0, params.eta, params.beta, params.tau)),
        )
    return peak
