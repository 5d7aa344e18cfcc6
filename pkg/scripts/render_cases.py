#!/usr/bin/env python3
"""Render one example drawing per construction case to SVG files.

Usage: python scripts/render_cases.py [outdir]
"""
import pathlib
import sys

from kangulate.cli import emit_svg
from kangulate.gen import (
    cluster_dent_set,
    random_point_set,
    staircase_cluster_set,
    staircase_ring_set,
)
from kangulate.partition import kangulate

SOURCES = {
    "J0": (lambda: random_point_set(32, 0), 4),
    "J1": (lambda: random_point_set(33, 0), 4),
    "C1A": (lambda: random_point_set(51, 0), 5),
    "C1B": (lambda: cluster_dent_set(75, 2, 0), 6),
    "C2A": (lambda: staircase_ring_set(98, 0), 7),
    "C2B": (lambda: staircase_cluster_set(129, 0), 8),
}


def main():
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "renders")
    outdir.mkdir(parents=True, exist_ok=True)
    for label, (source, k) in SOURCES.items():
        ps = source()
        result = kangulate(ps, k)
        if not result.ok or result.trace.case_label != label:
            print(f"{label}: got {result.status}"
                  f"{'/' + result.trace.case_label if result.trace else ''}, skipping")
            continue
        path = outdir / f"{label.lower()}_k{k}_n{ps.n}.svg"
        path.write_text(emit_svg(ps, result.graph))
        print(f"{label}: k={k} n={ps.n} -> {path}")


if __name__ == "__main__":
    main()
