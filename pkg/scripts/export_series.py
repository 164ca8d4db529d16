#!/usr/bin/env python3
"""Export plot-ready trajectory and band series for every preset."""

import argparse
import csv
from pathlib import Path

from techrace.model import sample_trajectory
from techrace.scenarios import build_preset, preset_names
from techrace.sensitivity import BandSpec, uncertainty_band


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out/series")
    parser.add_argument("--resolution", type=int, default=100)
    parser.add_argument("--band-resolution", type=int, default=20)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    for name in preset_names():
        slug = name.replace("/", "_")
        params = build_preset(name)

        traj = sample_trajectory(params, resolution=args.resolution)
        with open(out / f"trajectory_{slug}.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(traj.FIELDS)
            writer.writerows(traj.rows())

        env = uncertainty_band(params, BandSpec(resolution=args.band_resolution))
        with open(out / f"band_{slug}.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            names = ["p", "d", "rai", "cumulative_risk"]
            header = ["t"]
            for n in names:
                header += [f"{n}_lower", f"{n}_nominal", f"{n}_upper"]
            writer.writerow(header)
            for i, t in enumerate(env.t):
                row = [float(t)]
                for n in names:
                    lo, nom, hi = env.fields[n]
                    row += [float(lo[i]), float(nom[i]), float(hi[i])]
                writer.writerow(row)
        print(f"wrote series for {name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
