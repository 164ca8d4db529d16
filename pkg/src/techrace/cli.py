"""Command-line front door.

Subcommands::

    run          evaluate one preset and print its risk summary
    table        emit table4 or table5 (text or CSV)
    sweep        one-at-a-time parameter sweep (CSV)
    walkthrough  six-step baseline-to-moonshot comparison
    validate     Monte Carlo agreement check (exit 1 on failure)
    trajectory   time series for one preset (CSV)
    band         uncertainty-band envelopes for one preset (CSV)
    serve        run the HTTP evaluation service

All numeric output is a pure function of the arguments, the preset catalog,
and the seed flags, so repeated invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional

from . import __version__
from .model import breakout_prob, cumulative_risk, sample_trajectory
from .scenarios import (
    PRESETS_ENV_VAR,
    build_preset,
    preset_names,
    run_scenario,
    table,
    table_csv,
    walkthrough,
)
from .sensitivity import BandSpec, DEFAULT_GRIDS, SweepGrid, oat_sweep, sweep_csv, uncertainty_band
from .montecarlo import validate


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _preset_or_error(parser: argparse.ArgumentParser, name: str):
    try:
        return build_preset(name)
    except LookupError as exc:
        parser.error(str(exc))


def cmd_run(parser, args) -> int:
    params = _preset_or_error(parser, args.preset)
    if args.horizon is not None:
        params = params.with_(horizon=args.horizon)
    r = cumulative_risk(params)
    p = breakout_prob(r)
    prec = args.precision
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["scenario", "horizon", "r", "p"])
        w.writerow([args.preset, f"{params.horizon:g}", f"{r:.{prec}f}", f"{p:.{prec}f}"])
        _write(buf.getvalue(), args.out)
    else:
        h = f"{params.horizon:g}"
        _write(
            f"scenario {args.preset}\nR({h}) = {r:.{prec}f}\nP({h}) = {p:.{prec}f}\n",
            args.out,
        )
    return 0


def _table_text(report, precision: int) -> str:
    csv_text = table_csv(report, precision)
    rows = list(csv.reader(io.StringIO(csv_text)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(parser, args) -> int:
    report = table(args.id)
    if args.format == "csv":
        _write(table_csv(report, args.precision), args.out)
    else:
        _write(_table_text(report, args.precision), args.out)
    return 0


def cmd_sweep(parser, args) -> int:
    values = None
    if args.values:
        values = tuple(float(v) for v in args.values.split(","))
    result = oat_sweep(SweepGrid(parameter=args.param, values=values))
    _write(sweep_csv(result), args.out)
    return 0


def cmd_walkthrough(parser, args) -> int:
    lines = []
    for step in walkthrough():
        parts = []
        for key, value in step.values.items():
            if isinstance(value, float):
                parts.append(f"{key}={value:.{args.precision}f}")
            else:
                parts.append(f"{key}={value}")
        lines.append(f"Step {step.index} - {step.title}: " + ", ".join(parts))
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_validate(parser, args) -> int:
    names = [args.preset] if args.preset else preset_names()
    failed = False
    lines = []
    for name in names:
        try:
            report = validate(name, trials=args.trials, seed=args.seed)
        except LookupError as exc:
            parser.error(str(exc))
        status = "pass" if report.passed else "FAIL"
        if report.inconclusive:
            status = "inconclusive"
        failed = failed or (not report.passed and not report.inconclusive)
        lines.append(
            f"{name}: {status} analytic_r={report.analytic_r:.6f} "
            f"mc_r={report.result.mean_undetected:.6f}±{report.result.ci99_mean:.6f} "
            f"analytic_p={report.analytic_p:.6f} "
            f"mc_p={report.result.p_at_least_one:.6f}±{report.result.ci99_p:.6f}"
        )
    _write("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_trajectory(parser, args) -> int:
    params = _preset_or_error(parser, args.preset)
    if args.horizon is not None:
        params = params.with_(horizon=args.horizon)
    traj = sample_trajectory(params, resolution=args.resolution)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(traj.FIELDS)
    for row in traj.rows():
        w.writerow([repr(v) for v in row])
    _write(buf.getvalue(), args.out)
    return 0


def cmd_band(parser, args) -> int:
    params = _preset_or_error(parser, args.preset)
    env = uncertainty_band(params, BandSpec(resolution=args.resolution))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = ["p", "d", "rai", "cumulative_risk"]
    header = ["t"]
    for n in names:
        header += [f"{n}_lower", f"{n}_nominal", f"{n}_upper"]
    w.writerow(header)
    for i, t in enumerate(env.t):
        row = [repr(float(t))]
        for n in names:
            lo, nom, hi = env.fields[n]
            row += [repr(float(lo[i])), repr(float(nom[i])), repr(float(hi[i]))]
        w.writerow(row)
    _write(buf.getvalue(), args.out)
    return 0


def cmd_serve(parser, args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.bind, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="techrace",
        description=(
            "Deterministic simulation of a concealment/detection technology "
            "race and the covert-breakout risk it implies. Preset catalog "
            f"override: ${PRESETS_ENV_VAR}."
        ),
    )
    parser.add_argument("--version", action="version", version=f"techrace {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument(
        "--precision", type=int, default=3, help="decimal places for reported values (>= 1)"
    )

    p_run = sub.add_parser("run", parents=[common], help="evaluate one preset")
    p_run.add_argument("--preset", required=True, help="preset name, e.g. limited/baseline/no-opp")
    p_run.add_argument("--horizon", type=float, default=None, help="override horizon in years")
    p_run.add_argument("--format", choices=("text", "csv"), default="text")

    p_table = sub.add_parser("table", parents=[common], help="emit a summary table")
    p_table.add_argument("--id", required=True, choices=("table4", "table5"))
    p_table.add_argument("--format", choices=("text", "csv"), default="text")

    p_sweep = sub.add_parser("sweep", parents=[common], help="one-at-a-time parameter sweep")
    p_sweep.add_argument("--param", required=True, choices=sorted(DEFAULT_GRIDS))
    p_sweep.add_argument(
        "--values", default=None, help="comma-separated values (default: documented grid)"
    )
    p_sweep.add_argument("--format", choices=("csv",), default="csv")

    sub.add_parser("walkthrough", parents=[common], help="six-step worked comparison")

    p_val = sub.add_parser("validate", parents=[common], help="Monte Carlo agreement check")
    p_val.add_argument("--preset", default=None, help="single preset (default: all twelve)")
    p_val.add_argument("--trials", type=int, default=100_000)
    p_val.add_argument("--seed", type=int, default=1)

    p_traj = sub.add_parser("trajectory", parents=[common], help="time series for one preset")
    p_traj.add_argument("--preset", required=True)
    p_traj.add_argument("--horizon", type=float, default=None)
    p_traj.add_argument("--resolution", type=int, default=100, help="samples per year")
    p_traj.add_argument("--format", choices=("csv",), default="csv")

    p_band = sub.add_parser("band", parents=[common], help="uncertainty-band envelopes")
    p_band.add_argument("--preset", required=True)
    p_band.add_argument("--resolution", type=int, default=40, help="samples per year")
    p_band.add_argument("--format", choices=("csv",), default="csv")

    p_serve = sub.add_parser("serve", help="run the HTTP evaluation service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--bind", default="127.0.0.1")

    return parser


_HANDLERS = {
    "run": cmd_run,
    "table": cmd_table,
    "sweep": cmd_sweep,
    "walkthrough": cmd_walkthrough,
    "validate": cmd_validate,
    "trajectory": cmd_trajectory,
    "band": cmd_band,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "precision", 1) < 1:
        parser.error("--precision must be at least 1")
    return _HANDLERS[args.command](parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
