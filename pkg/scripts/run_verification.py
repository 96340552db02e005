"""Run the full verification harness and summarise it.

    python scripts/run_verification.py --max-n 7 --report report.json

Prints one line per check plus the graphs on which the global lower bounds
are attained.
"""

import argparse
import json
import time
from pathlib import Path

from linealliance.verify import VerifyConfig, run_verification


def main() -> None:
    ap = argparse.ArgumentParser(description="exhaustive verification over small connected graphs")
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--charset-max-n", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--report", type=Path, default=None)
    args = ap.parse_args()

    cfg = VerifyConfig(max_n=args.max_n, min_n=args.min_n, charset_max_n=args.charset_max_n, jobs=args.jobs)
    t0 = time.perf_counter()
    report = run_verification(cfg)
    elapsed = time.perf_counter() - t0

    s = report["summary"]
    print(f"{s['graphs']} graphs, {s['violations']} violations, {s['skipped']} skipped, {elapsed:.1f}s")
    for name, row in s["by_check"].items():
        print(f"  {name:<30} passed {row['passed']:>5}  violations {row['violations']:>3}")
    for bound, hits in report["tightness"].items():
        print(f"  attained {bound:<22} {len(hits):>4} graphs  e.g. {', '.join(hits[:3])}")
    if args.report:
        args.report.write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
