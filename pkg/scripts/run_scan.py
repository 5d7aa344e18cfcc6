#!/usr/bin/env python3
"""Probe the small-n conjecture: interior-count feasibility vs exhaustive search.

Usage: python scripts/run_scan.py [--k 4] [--n-min 4] [--n-max 8] [--seeds 50]
"""
import argparse
import sys

from kangulate.oracle import SearchBudget, conjecture_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--n-min", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--time-limit", type=float, default=120.0)
    args = ap.parse_args()

    report = conjecture_scan(args.k, range(args.n_min, args.n_max + 1), args.seeds,
                             SearchBudget(time_limit=args.time_limit),
                             workers=args.workers)
    print(report.to_text())
    return 0 if not report.discrepancies else 3


if __name__ == "__main__":
    sys.exit(main())
