"""Simulation engine for a concealment/detection technology race.

Public surface:

* :mod:`techrace.model` — parameter types, capability curves, detection and
  hazard maps, risk integrals, crossing times, bounds, trajectories.
* :mod:`techrace.scenarios` — the twelve named presets, summary tables,
  and the worked walkthrough.
* :mod:`techrace.sensitivity` — parameter sweeps, elasticities, detection
  curve families, uncertainty bands.
* :mod:`techrace.montecarlo` — thinning-based stochastic validation.
* :mod:`techrace.cli` / :mod:`techrace.service` — command line and HTTP
  front ends.
"""

__version__ = "0.1.0"

from .model import (
    BoundEstimate,
    CrossingReport,
    DetSchedule,
    ModelParams,
    Trajectory,
    breakout_prob,
    crossing_times,
    cumulative_risk,
    det_capability,
    detection_prob,
    hazard_rate,
    pet_capability,
    relative_advantage,
    risk_bounds,
    sample_trajectory,
)
from .scenarios import (
    RiskSummary,
    ScenarioSpec,
    build_preset,
    preset_names,
    run_scenario,
    table,
    walkthrough,
)

__all__ = [
    "__version__",
    "BoundEstimate",
    "CrossingReport",
    "DetSchedule",
    "ModelParams",
    "Trajectory",
    "RiskSummary",
    "ScenarioSpec",
    "breakout_prob",
    "build_preset",
    "crossing_times",
    "cumulative_risk",
    "det_capability",
    "detection_prob",
    "hazard_rate",
    "pet_capability",
    "preset_names",
    "relative_advantage",
    "risk_bounds",
    "run_scenario",
    "sample_trajectory",
    "table",
    "walkthrough",
]
