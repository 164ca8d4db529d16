"""Stateless JSON-over-HTTP evaluation service.

Endpoints:

* ``GET  /api/presets``     — the twelve presets with display names and
  full parameter payloads.
* ``POST /api/evaluate``    — trajectory series plus a risk summary for an
  arbitrary parameter vector.
* ``POST /api/sweep``       — one-at-a-time sweep surface.
* ``POST /api/montecarlo``  — thinning simulation result.

Malformed bodies return 400 with field-level diagnostics; resource guards
(horizon > 200 years, resolution > 10^4 samples/year, trials > 10^7)
return 422.  Responses are pure functions of the request body and the
preset catalog.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .model import (
    DetSchedule,
    ModelParams,
    breakout_prob,
    crossing_times,
    cumulative_risk,
    sample_trajectory,
)
from .montecarlo import MCConfig, simulate
from .scenarios import ScenarioSpec, build_preset, display_name, preset_names, parse_name
from .sensitivity import DEFAULT_GRIDS, SweepGrid, oat_sweep

__all__ = ["create_app"]

MAX_HORIZON = 200.0
MAX_RESOLUTION = 10_000
MAX_TRIALS = 10_000_000


class DetStep(BaseModel):
    t: float
    delta: float


class ParamsPayload(BaseModel):
    """Flat wire form of the full parameter vector."""

    p0: float
    d0: float
    g_p: float
    p_max: float
    kappa: float
    theta: float
    pi0: float
    lambda0: float
    eta: float
    beta: float
    tau: float
    det_steps: list[DetStep]
    horizon: float


class EvaluateRequest(ParamsPayload):
    resolution: int = 100


class SweepRequest(BaseModel):
    parameter: str
    values: Optional[list[float]] = None
    regimes: Optional[list[str]] = None


class MonteCarloRequest(ParamsPayload):
    trials: int
    seed: int
    max_rate: Optional[float] = None


def _to_params(payload: ParamsPayload) -> ModelParams:
    return ModelParams(
        p0=payload.p0,
        g_p=payload.g_p,
        p_max=payload.p_max,
        kappa=payload.kappa,
        theta=payload.theta,
        pi0=payload.pi0,
        lambda0=payload.lambda0,
        eta=payload.eta,
        beta=payload.beta,
        tau=payload.tau,
        det_schedule=DetSchedule(payload.d0, tuple((s.t, s.delta) for s in payload.det_steps)),
        horizon=payload.horizon,
    )


def _params_payload(params: ModelParams) -> dict:
    return {
        "p0": params.p0,
        "d0": params.d0,
        "g_p": params.g_p,
        "p_max": params.p_max,
        "kappa": params.kappa,
        "theta": params.theta,
        "pi0": params.pi0,
        "lambda0": params.lambda0,
        "eta": params.eta,
        "beta": params.beta,
        "tau": params.tau,
        "det_steps": [{"t": t, "delta": d} for t, d in params.det_schedule.steps],
        "horizon": params.horizon,
    }


def _guard(condition: bool, message: str):
    if condition:
        raise _ResourceGuard(message)


class _ResourceGuard(Exception):
    pass


def create_app(cors: bool = True) -> FastAPI:
    app = FastAPI(title="techrace", version="0.1.0")

    if cors:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(_ResourceGuard)
    async def resource_guard(request: Request, exc: _ResourceGuard):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def invalid_parameters(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/api/presets")
    def presets():
        out = []
        for name in preset_names():
            spec = parse_name(name)
            params = build_preset(spec)
            out.append(
                {
                    "name": name,
                    "display_name": display_name(spec),
                    "params": _params_payload(params),
                }
            )
        return {"presets": out}

    @app.post("/api/evaluate")
    def evaluate(body: EvaluateRequest):
        _guard(body.horizon > MAX_HORIZON, f"horizon is capped at {MAX_HORIZON} years")
        _guard(
            body.resolution > MAX_RESOLUTION,
            f"resolution is capped at {MAX_RESOLUTION} samples per year",
        )
        _guard(body.resolution < 1, "resolution must be at least 1")
        params = _to_params(body)
        traj = sample_trajectory(params, resolution=body.resolution)
        r = cumulative_risk(params)
        crossing = crossing_times(params).first_persistent
        return {
            "series": traj.series(),
            "summary": {"r": r, "p": breakout_prob(r), "crossing": crossing},
        }

    @app.post("/api/sweep")
    def sweep(body: SweepRequest):
        if body.parameter not in DEFAULT_GRIDS:
            raise ValueError(
                f"unknown sweep parameter {body.parameter!r}; "
                f"valid parameters: {', '.join(DEFAULT_GRIDS)}"
            )
        grid = SweepGrid(
            parameter=body.parameter,
            values=tuple(body.values) if body.values else None,
            regimes=tuple(body.regimes) if body.regimes else ("limited", "disruptive", "transformative"),
        )
        result = oat_sweep(grid)
        return {
            "parameter": result.parameter,
            "records": [
                {"parameter": p.parameter, "value": p.value, "regime": p.regime, "r10": p.r10}
                for p in result.points
            ],
        }

    @app.post("/api/montecarlo")
    def montecarlo(body: MonteCarloRequest):
        _guard(body.trials > MAX_TRIALS, f"trials are capped at {MAX_TRIALS}")
        _guard(body.horizon > MAX_HORIZON, f"horizon is capped at {MAX_HORIZON} years")
        params = _to_params(body)
        result = simulate(
            MCConfig(params=params, trials=body.trials, seed=body.seed, max_rate=body.max_rate)
        )
        return {
            "mean_undetected": result.mean_undetected,
            "p_at_least_one": result.p_at_least_one,
            "ci99_mean": result.ci99_mean,
            "ci99_p": result.ci99_p,
            "trials": result.trials,
            "seed": result.seed,
            "max_rate": result.max_rate,
            "inconclusive": result.inconclusive,
        }

    return app
