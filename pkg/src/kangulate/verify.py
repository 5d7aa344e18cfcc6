"""Construction-independent verification that a drawing is a k-angulation.

The verifier never trusts PlaneGraph internals: it re-derives rotations and
faces from coordinates with its own tracer, identifies the outer face by
exact signed area, and checks each claim separately so failures are
attributable.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .geom import PointSet, _cmp_clockwise
from .plane_graph import PlaneGraph, find_drawing_violation, two_connected_from_edges


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            detail = f" ({c.detail})" if c.detail else ""
            lines.append(f"  [{status}] {c.name}{detail}")
        lines.append(f"overall: {'pass' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def _clockwise_rotations(xy: np.ndarray, edges) -> dict[int, list[int]]:
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for u, lst in nbrs.items():
        dirs = {w: (int(xy[w, 0] - xy[u, 0]), int(xy[w, 1] - xy[u, 1])) for w in lst}
        lst.sort(key=functools.cmp_to_key(lambda a, b: _cmp_clockwise(dirs[a], dirs[b])))
    return nbrs


def trace_faces_exact(xy: np.ndarray, edges) -> list[list[int]]:
    """All facial walks (vertex sequences) of the embedded edge set."""
    rot = _clockwise_rotations(xy, edges)
    pos = {(u, w): i for u, lst in rot.items() for i, w in enumerate(lst)}
    faces: list[list[int]] = []
    seen: set[tuple[int, int]] = set()
    for u in sorted(rot):
        for w in rot[u]:
            if (u, w) in seen:
                continue
            walk: list[int] = []
            cur = (u, w)
            while cur not in seen:
                seen.add(cur)
                walk.append(cur[0])
                a, b = cur
                lst = rot[b]
                i = pos[(b, a)]
                cur = (b, lst[(i + 1) % len(lst)])
            faces.append(walk)
    return faces


def _shoelace2(xy: np.ndarray, walk: list[int]) -> int:
    total = 0
    for i, u in enumerate(walk):
        v = walk[(i + 1) % len(walk)]
        total += int(xy[u, 0]) * int(xy[v, 1]) - int(xy[v, 0]) * int(xy[u, 1])
    return total


def verify_kangulation(ps: PointSet, g, k: int) -> VerificationReport:
    """Six independent checks that ``g`` is a k-angulation drawn on ``ps``.

    ``g`` may be a PlaneGraph or a bare edge list; only its edge set (and,
    when present, its outer-face designation) is consulted.
    """
    if isinstance(g, PlaneGraph):
        edges = g.edge_tuples()
        declared_outer = set(g.outer_cycle())
    else:
        edges = [(min(int(u), int(v)), max(int(u), int(v))) for u, v in g]
        declared_outer = None
    xy = ps.xy
    n = ps.n
    checks: list[Check] = []

    used = set()
    for u, v in edges:
        used.add(u)
        used.add(v)
    spans = used == set(range(n))
    checks.append(Check("vertex-set", spans,
                        "" if spans else f"{n - len(used)} point(s) unused"))

    violation = find_drawing_violation(xy, np.asarray(edges, dtype=np.int64))
    checks.append(Check("straight-line-planarity", violation is None,
                        "" if violation is None else str(violation)))

    two = two_connected_from_edges(n, edges)
    checks.append(Check("two-connected", two))

    if violation is not None:
        # faces of a non-plane drawing are meaningless; report remaining checks failed
        checks.append(Check("face-sizes", False, "skipped: drawing invalid"))
        checks.append(Check("outer-face", False, "skipped: drawing invalid"))
        checks.append(Check("euler-residue", False, "skipped: drawing invalid"))
        return VerificationReport(tuple(checks))

    faces = trace_faces_exact(xy, edges)
    areas = [_shoelace2(xy, w) for w in faces]
    negative = [i for i, a in enumerate(areas) if a < 0]
    outer_ok = len(negative) == 1
    outer_detail = f"{len(negative)} boundary walk(s)"
    outer_idx = negative[0] if negative else None
    if outer_ok and declared_outer is not None:
        outer_ok = set(faces[outer_idx]) == declared_outer
        if not outer_ok:
            outer_detail = "designated outer face is not the unbounded one"

    face_ok = True
    face_detail = ""
    for i, w in enumerate(faces):
        if i == outer_idx:
            continue
        if len(w) != k or len(set(w)) != k:
            face_ok = False
            face_detail = f"internal face walk {w} is not a simple {k}-cycle"
            break
    checks.append(Check("face-sizes", face_ok, face_detail))
    checks.append(Check("outer-face", outer_ok, "" if outer_ok else outer_detail))

    if outer_idx is None:
        checks.append(Check("euler-residue", False, "no outer walk found"))
        return VerificationReport(tuple(checks))

    e = len(edges)
    f = len(faces)
    outer_walk = faces[outer_idx]
    r = len(outer_walk)
    r_distinct = len(set(outer_walk))
    euler_ok = True
    details = []
    if n - e + f != 2:
        euler_ok = False
        details.append(f"V-E+F = {n - e + f} != 2")
    if 2 * e != k * (f - 1) + r:
        euler_ok = False
        details.append(f"2e = {2 * e} != k(f-1)+r = {k * (f - 1) + r}")
    if r != r_distinct:
        euler_ok = False
        details.append("outer walk is not a simple cycle")
    internal_vertices = n - r_distinct
    if (internal_vertices - (k - n)) % (k - 2) != 0:
        euler_ok = False
        details.append(f"n-r = {internal_vertices} not congruent to k-n mod k-2")
    checks.append(Check("euler-residue", euler_ok, "; ".join(details)))
    return VerificationReport(tuple(checks))


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    j: int
    interior_count: int
    exact_regime: bool   # n >= 2k^2: the characterization is exact
    reason: str = ""


def feasibility(ps: PointSet, k: int) -> FeasibilityResult:
    """Interior-point feasibility test.

    Exact for n >= 2k^2; below that the interior-count condition is only
    necessary, which the ``exact_regime`` flag conveys.
    """
    from .partition import required_j

    n = ps.n
    interior = ps.interior_count
    if n < k:
        return FeasibilityResult(False, required_j(max(n, 3), k) if n >= 3 else 0,
                                 interior, False, f"n = {n} < k = {k}")
    j = required_j(n, k)
    exact = n >= 2 * k * k
    if interior < j:
        return FeasibilityResult(False, j, interior, exact,
                                 f"needs at least {j} interior points, has {interior}")
    return FeasibilityResult(True, j, interior, exact)
