"""Command-line interface: angulate / verify / oracle / scan, plus the
plain-text point format, the structured result document and SVG rendering.

Exit codes: 0 success or verified, 1 input/usage error, 2 infeasible,
3 verification failed (or scan discrepancy), 4 honest failure below the
guaranteed range.  Documents contain no volatile fields (timings go to
stderr) so identical inputs produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .geom import (
    CollinearTriple,
    CoordinateOutOfRange,
    DuplicatePoint,
    GeometryError,
    PointSet,
    TooFewPoints,
    make_point_set,
)
from .oracle import EXHAUSTED, FOUND, SearchBudget, brute_force_kangulation, conjecture_scan
from .partition import KangulationResult, kangulate
from .plane_graph import CrossingEdges, PlaneGraph, internal_faces, make_plane_graph
from .verify import verify_kangulation

SCHEMA = "kangulate/1"


class ParseError(GeometryError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_points(text: str) -> PointSet:
    """Lines of "x y" integers; '#' comments and blank lines are ignored.
    Geometric rejections are reported with the offending line numbers."""
    pts: list[tuple[int, int]] = []
    lines_of: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'x y', got {raw.strip()!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer coordinate in {raw.strip()!r}")
        pts.append((x, y))
        lines_of.append(lineno)
    try:
        return make_point_set(pts)
    except CollinearTriple as exc:
        i, j, k = exc.indices
        raise ParseError(lines_of[i],
                         f"collinear points at lines {lines_of[i]}, {lines_of[j]}, {lines_of[k]}")
    except DuplicatePoint as exc:
        i, j = exc.indices
        raise ParseError(lines_of[i],
                         f"duplicate point at lines {lines_of[i]} and {lines_of[j]}")
    except TooFewPoints as exc:
        raise ParseError(len(lines_of), str(exc))
    except CoordinateOutOfRange as exc:
        raise ParseError(lines_of[0], str(exc))


def _canonical_cycle(cycle: list[int]) -> list[int]:
    """Rotate a cyclic vertex list to start at its smallest vertex,
    preserving orientation."""
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def emit_result(result: KangulationResult) -> str:
    """Structured JSON document; round-trips through the verify subcommand."""
    doc: dict = {
        "schema": SCHEMA,
        "status": result.status,
        "feasible": result.status != "infeasible",
        "k": result.k,
        "n": result.n,
        "j": result.j,
        "interior": result.interior_count,
    }
    if result.detail:
        doc["detail"] = result.detail
    if result.ok and result.graph is not None:
        g = result.graph
        doc["case"] = result.trace.case_label if result.trace else None
        doc["edges"] = [[int(u), int(v)] for u, v in g.edge_tuples()]
        faces = [_canonical_cycle(f) for f in internal_faces(g)]
        doc["internal_faces"] = sorted(faces)
        doc["outer_face"] = _canonical_cycle(g.outer_cycle())
        if result.trace:
            doc["pontoon_orders"] = dict(sorted(result.trace.pontoon_orders.items()))
            doc["spiral_reversed"] = result.trace.spiral_reversed
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit_svg(ps: PointSet, g: PlaneGraph, shade: bool = True) -> str:
    """Deterministic SVG: shaded internal faces, edges, vertices."""
    xy = ps.xy
    minx, miny = (int(v) for v in xy.min(axis=0))
    maxx, maxy = (int(v) for v in xy.max(axis=0))
    span = max(maxx - minx, maxy - miny, 1)
    margin = max(1, span // 20)

    def sx(x: int) -> int:
        return x - minx + margin

    def sy(y: int) -> int:
        return maxy - y + margin   # flip so +y is up

    w = maxx - minx + 2 * margin
    h = maxy - miny + 2 * margin
    r = max(1, span // 150)
    stroke = max(1, span // 400)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}">']
    if shade:
        for face in sorted(_canonical_cycle(f) for f in internal_faces(g)):
            pts = " ".join(f"{sx(int(xy[v, 0]))},{sy(int(xy[v, 1]))}" for v in face)
            out.append(f'<polygon points="{pts}" fill="#dce9f5" stroke="none"/>')
    for u, v in g.edge_tuples():
        out.append(
            f'<line x1="{sx(int(xy[u, 0]))}" y1="{sy(int(xy[u, 1]))}" '
            f'x2="{sx(int(xy[v, 0]))}" y2="{sy(int(xy[v, 1]))}" '
            f'stroke="#20303f" stroke-width="{stroke}"/>')
    for i in range(ps.n):
        out.append(f'<circle cx="{sx(int(xy[i, 0]))}" cy="{sy(int(xy[i, 1]))}" '
                   f'r="{r}" fill="#c23b22"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _load_points(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh.read())


def _cmd_angulate(args) -> int:
    ps = _load_points(args.input)
    t0 = time.perf_counter()
    result = kangulate(ps, args.k)
    elapsed = time.perf_counter() - t0
    print(f"angulate: n={ps.n} k={args.k} status={result.status} "
          f"({elapsed * 1000:.1f} ms)", file=sys.stderr)
    doc = emit_result(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    if result.ok and args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(emit_svg(ps, result.graph))
    if result.status == "infeasible":
        return 2
    if result.status == "honest-failure":
        return 4
    return 0


def _cmd_verify(args) -> int:
    ps = _load_points(args.input)
    with open(args.graph, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not doc.get("feasible", False) or "edges" not in doc:
        print("document does not contain a constructed graph", file=sys.stderr)
        return 1
    edges = [(int(u), int(v)) for u, v in doc["edges"]]
    try:
        g = make_plane_graph(ps, edges, validate=True)
    except CrossingEdges as exc:
        print(f"verification failed: {exc}")
        return 3
    report = verify_kangulation(ps, g, args.k)
    print(report)
    return 0 if report.overall else 3


def _cmd_oracle(args) -> int:
    ps = _load_points(args.input)
    budget = SearchBudget(max_nodes=args.max_nodes, time_limit=args.time_limit)
    res = brute_force_kangulation(ps, args.k, budget)
    print(f"oracle: n={ps.n} k={args.k} -> {res.status} "
          f"(nodes={res.nodes_expanded}, {res.elapsed:.2f}s)")
    if res.status == FOUND:
        return 0
    if res.status == EXHAUSTED:
        return 1
    return 2


def _cmd_scan(args) -> int:
    budget = SearchBudget(max_nodes=args.max_nodes, time_limit=args.time_limit)
    report = conjecture_scan(args.k, range(args.n_min, args.n_max + 1),
                             args.seeds, budget, workers=args.workers)
    print(report.to_text())
    return 0 if not report.discrepancies else 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kangulate",
                                description="k-angulations of planar point sets")
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("angulate", help="decide and construct a k-angulation")
    pa.add_argument("--k", type=int, required=True)
    pa.add_argument("--input", required=True, help="point file: lines of 'x y'")
    pa.add_argument("--out", help="write the result document here (default stdout)")
    pa.add_argument("--svg", help="render the drawing to this SVG file")
    pa.set_defaults(func=_cmd_angulate)

    pv = sub.add_parser("verify", help="verify a result document against points")
    pv.add_argument("--k", type=int, required=True)
    pv.add_argument("--input", required=True)
    pv.add_argument("--graph", required=True, help="result document to check")
    pv.set_defaults(func=_cmd_verify)

    po = sub.add_parser("oracle", help="exhaustive search on a small point set")
    po.add_argument("--k", type=int, required=True)
    po.add_argument("--input", required=True)
    po.add_argument("--max-nodes", type=int, default=20_000_000)
    po.add_argument("--time-limit", type=float, default=120.0)
    po.set_defaults(func=_cmd_oracle)

    pc = sub.add_parser("scan", help="probe the small-n conjecture with the oracle")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--n-min", type=int, required=True)
    pc.add_argument("--n-max", type=int, required=True)
    pc.add_argument("--seeds", type=int, default=20)
    pc.add_argument("--workers", type=int, default=1)
    pc.add_argument("--max-nodes", type=int, default=20_000_000)
    pc.add_argument("--time-limit", type=float, default=120.0)
    pc.set_defaults(func=_cmd_scan)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GeometryError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
