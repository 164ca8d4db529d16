#!/usr/bin/env python3
"""Write both scenario summary tables (CSV + JSON) to an output directory."""

import argparse
import json
from pathlib import Path

from techrace.scenarios import table, table_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out", help="output directory (default: out/)")
    parser.add_argument("--precision", type=int, default=3)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for table_id in ("table4", "table5"):
        report = table(table_id)
        (out / f"{table_id}.csv").write_text(table_csv(report, args.precision))
        (out / f"{table_id}.json").write_text(json.dumps(list(report.rows), indent=2))
        print(f"wrote {out / table_id}.{{csv,json}}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
