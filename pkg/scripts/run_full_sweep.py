#!/usr/bin/env python3
"""Run the full verification grid and write the report stream plus summary.

Usage:
    python3 scripts/run_full_sweep.py [--workers K] [--out reports.jsonl]

Equivalent to `franel sweep`, kept as a script so the grid is easy to run
(and redirect) without an installed entry point.
"""
import argparse
import sys
import time

sys.path.insert(0, "src")

from franel.harness import run_sweep
from franel.reports import to_json_line


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", default=None,
                        help="write json-lines records here (default: discard, "
                        "print only the summary)")
    args = parser.parse_args()

    sink = open(args.out, "w") if args.out else None
    on_report = (
        (lambda sid, r: print(to_json_line(r), file=sink)) if sink else None
    )
    started = time.monotonic()
    summary = run_sweep(workers=args.workers, on_report=on_report)
    elapsed = time.monotonic() - started
    if sink:
        sink.close()

    for sid, counts in summary["statements"].items():
        print(f"{sid:24s} pass={counts['pass']:<7d} fail={counts['fail']:<4d} "
              f"skipped={counts['skipped']}")
    total = summary["total"]
    print(f"{'TOTAL':24s} pass={total['pass']:<7d} fail={total['fail']:<4d} "
          f"skipped={total['skipped']}  ({elapsed:.1f}s, "
          f"workers={args.workers})")
    return 1 if total["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
