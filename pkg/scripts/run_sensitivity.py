#!/usr/bin/env python3
"""Run the full one-at-a-time robustness grid and the arc elasticities.

Writes one CSV per swept parameter plus an elasticity summary.
"""

import argparse
from pathlib import Path

from techrace.scenarios import build_preset
from techrace.sensitivity import DEFAULT_GRIDS, SweepGrid, arc_elasticity, oat_sweep, sweep_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out/sensitivity")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    for parameter in DEFAULT_GRIDS:
        result = oat_sweep(SweepGrid(parameter))
        (out / f"sweep_{parameter}.csv").write_text(sweep_csv(result))
        print(f"wrote {out / f'sweep_{parameter}.csv'}")

    lines = ["parameter,regime,elasticity"]
    for regime in ("limited", "disruptive", "transformative"):
        base = build_preset(f"{regime}/baseline/opp")
        for parameter, grid in DEFAULT_GRIDS.items():
            eps = arc_elasticity(parameter, min(grid), max(grid), base)
            lines.append(f"{parameter},{regime},{eps:.6f}")
    (out / "arc_elasticities.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {out / 'arc_elasticities.csv'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
