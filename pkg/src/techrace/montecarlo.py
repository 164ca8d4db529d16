"""Stochastic validation of the analytic risk results.

Breakout attempts are simulated as a non-homogeneous Poisson process by
thinning: candidate events arrive at a constant ``max_rate`` and each is
kept with probability ``hazard(t) / max_rate``; a kept attempt goes
undetected with probability ``1 - Pr_detect(t)``.  The per-trial count of
undetected attempts is therefore Poisson with mean ``R(T)``, making the
simulation an independent check of the quadrature path.

Randomness is counter-based for reproducibility: trials are laid out in
fixed blocks of ``CHUNK_TRIALS`` rows, block ``i`` drawing from
``Philox(key=seed).jumped(i)``, and every trial consumes a fixed slot range
of that block's stream.  Results are bitwise-identical for a given seed
regardless of how many trials are requested beyond a trial's own index or
in what order blocks are processed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.stats import poisson

from .model import (
    ModelParams,
    breakout_prob,
    cumulative_risk,
    detection_prob,
    hazard_rate,
    peak_hazard_rate,
    relative_advantage,
)
from .scenarios import ScenarioSpec, build_preset, display_name

__all__ = ["MCConfig", "MCResult", "MCValidation", "simulate", "validate", "CHUNK_TRIALS"]

# Fixed block size of the trial layout; part of the algorithm definition,
# so changing it changes the stream assignment (and the sampled numbers).
CHUNK_TRIALS = 4096

_Z99 = 2.5758293035489004  # two-sided 99% normal quantile

# Refuse ensembles whose candidate count per trial would be absurd; the
# expected count is max_rate * horizon.
_MAX_EXPECTED_CANDIDATES = 1e5


@dataclass(frozen=True)
class MCConfig:
    """Simulation setup: model, trial count, seed, and the thinning bound.

    ``max_rate`` defaults to ``lambda0 * (1 + eta)``, the global hazard
    ceiling; it must dominate the hazard everywhere on the horizon.
    """

    params: ModelParams
    trials: int
    seed: int
    max_rate: Optional[float] = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"need at least one trial, got {self.trials}")

    def bound(self) -> float:
        if self.max_rate is not None:
            return float(self.max_rate)
        return self.params.lambda0 * (1.0 + self.params.eta)


@dataclass(frozen=True)
class MCResult:
    """Estimates with 99% confidence half-widths.

    With fewer than two trials the half-widths are infinite and the result
    is flagged inconclusive.
    """

    mean_undetected: float
    p_at_least_one: float
    ci99_mean: float
    ci99_p: float
    trials: int
    seed: int
    max_rate: float
    inconclusive: bool


def _undetected_counts(config: MCConfig) -> np.ndarray:
    """Undetected-attempt count per trial (the raw simulation output)."""
    params = config.params
    bound = config.bound()
    peak = peak_hazard_rate(params)
    if bound < peak * (1.0 - 1e-12):
        raise ValueError(
            f"max_rate {bound:g} is below the peak hazard {peak:g}; "
            "thinning would be biased"
        )
    T = params.horizon
    lam_total = bound * T
    if lam_total > _MAX_EXPECTED_CANDIDATES:
        raise ValueError(
            f"expected candidate count {lam_total:g} per trial is too large"
        )
    if lam_total == 0.0:
        return np.zeros(config.trials, dtype=np.int64)

    # Highest candidate count reachable through the inverse CDF given the
    # 53-bit resolution of the uniforms; fixes the per-trial slot layout.
    m_cap = int(poisson.ppf(1.0 - 2.0**-53, lam_total))
    slots = 1 + 3 * m_cap
    col = np.arange(m_cap)

    counts = np.empty(config.trials, dtype=np.int64)
    for chunk_index, start in enumerate(range(0, config.trials, CHUNK_TRIALS)):
        n = min(CHUNK_TRIALS, config.trials - start)
        gen = np.random.Generator(np.random.Philox(key=config.seed).jumped(chunk_index))
        u = gen.random((n, slots))
        m = poisson.ppf(u[:, 0], lam_total).astype(np.int64)
        times = u[:, 1::3] * T
        rai = np.asarray(relative_advantage(times.ravel(), params)).reshape(times.shape)
        lam = hazard_rate(rai, params.lambda0, params.eta, params.beta, params.tau)
        kap = np.asarray(params.kappa_at(times.ravel()), dtype=float).reshape(times.shape)
        pr = detection_prob(rai, kap, params.theta, params.pi0, params.detection_floor)
        accepted = u[:, 2::3] * bound < lam
        undetected = u[:, 3::3] < 1.0 - pr
        live = col[None, :] < m[:, None]
        counts[start : start + n] = (accepted & undetected & live).sum(axis=1)
    return counts


def simulate(config: MCConfig) -> MCResult:
    """Run the thinning simulation and aggregate across trials."""
    counts = _undetected_counts(config)
    n = config.trials
    mean = float(counts.mean())
    p_hat = float((counts > 0).mean())
    if n < 2:
        ci_mean = ci_p = float("inf")
    else:
        ci_mean = _Z99 * float(counts.std(ddof=1)) / np.sqrt(n)
        ci_p = _Z99 * float(np.sqrt(p_hat * (1.0 - p_hat) / n))
    return MCResult(
        mean_undetected=mean,
        p_at_least_one=p_hat,
        ci99_mean=ci_mean,
        ci99_p=ci_p,
        trials=n,
        seed=config.seed,
        max_rate=config.bound(),
        inconclusive=n < 2,
    )


@dataclass(frozen=True)
class MCValidation:
    """Agreement report between the analytic and simulated results."""

    scenario: Optional[str]
    analytic_r: float
    analytic_p: float
    result: MCResult
    r_within_ci: bool
    p_within_ci: bool
    passed: bool
    inconclusive: bool


def validate(spec_or_params, trials: int, seed: int) -> MCValidation:
    """Check that the analytic risk lies inside the simulation's 99% CIs."""
    if isinstance(spec_or_params, ModelParams):
        params, name = spec_or_params, None
    else:
        spec = spec_or_params if isinstance(spec_or_params, ScenarioSpec) else None
        if spec is None:
            from .scenarios import parse_name

            spec = parse_name(spec_or_params)
        params, name = build_preset(spec), spec.name
    analytic_r = cumulative_risk(params)
    analytic_p = breakout_prob(analytic_r)
    result = simulate(MCConfig(params=params, trials=trials, seed=seed))
    r_ok = abs(result.mean_undetected - analytic_r) <= result.ci99_mean
    p_ok = abs(result.p_at_least_one - analytic_p) <= result.ci99_p
    return MCValidation(
        scenario=name,
        analytic_r=analytic_r,
        analytic_p=analytic_p,
        result=result,
        r_within_ci=r_ok,
        p_within_ci=p_ok,
        passed=r_ok and p_ok,
        inconclusive=result.inconclusive,
    )
