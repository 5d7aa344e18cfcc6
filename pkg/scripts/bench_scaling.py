#!/usr/bin/env python3
"""Wall-time scaling of the full pipeline (point-set construction included).

Usage: python scripts/bench_scaling.py [--k 4] [--repeats 3]
"""
import argparse
import math
import time

from kangulate.gen import random_point_set
from kangulate.geom import make_point_set
from kangulate.partition import kangulate

SIZES = [32, 128, 512, 4096, 32768, 131072]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--sizes", type=int, nargs="*", default=SIZES)
    args = ap.parse_args()

    times = {}
    for n in args.sizes:
        raw = random_point_set(n, 1).xy.copy()
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            ps = make_point_set(raw)
            result = kangulate(ps, args.k)
            best = min(best, time.perf_counter() - t0)
        times[n] = best
        print(f"n={n:>7}  {best * 1000:9.2f} ms  [{result.status}"
              f"{'/' + result.trace.case_label if result.trace else ''}]")

    sizes = sorted(times)
    for a, b in zip(sizes, sizes[1:]):
        print(f"  {a:>6} -> {b:<6}: {times[b] / times[a]:6.2f}x "
              f"({math.log(b / a, 4):.1f} four-fold steps)")
    steps = math.log(sizes[-1] / sizes[0], 4)
    growth = (times[sizes[-1]] / times[sizes[0]]) ** (1 / steps)
    print(f"geometric mean growth per 4x: {growth:.2f}x")


if __name__ == "__main__":
    main()
