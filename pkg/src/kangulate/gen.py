"""Seeded point-set generators for tests, scans and benchmarks.

Everything here is deterministic given (seed, parameters); the library core
never draws randomness of its own.
"""
from __future__ import annotations

import math
import random

from .geom import (
    COORD_LIMIT,
    CollinearTriple,
    DuplicatePoint,
    GeometryError,
    PointSet,
    _check_general_position,
    make_point_set,
)


def _try_build(pts) -> PointSet | None:
    try:
        ps = make_point_set(pts)
        if ps.n <= 400:
            # generators promise general position even past make_point_set's
            # own exhaustive-check cutoff
            _check_general_position(ps.xy)
        return ps
    except (CollinearTriple, DuplicatePoint):
        return None


def random_point_set(n: int, seed: int, span: int | None = None,
                     max_tries: int = 64) -> PointSet:
    """Uniform integer points in a square window, rejecting degeneracies."""
    if span is None:
        span = min(COORD_LIMIT, max(64, 8 * n * n))
    rng = random.Random(f"uniform-{n}-{seed}")
    for _ in range(max_tries):
        pts = [(rng.randrange(span), rng.randrange(span)) for _ in range(n)]
        ps = _try_build(pts)
        if ps is not None:
            return ps
    raise GeometryError(f"could not draw a general-position set (n={n}, seed={seed})")


def convex_position_set(n: int, seed: int = 0, jitter: bool = True) -> PointSet:
    """n points in convex position (on a parabola: no three are collinear)."""
    rng = random.Random(f"convex-{n}-{seed}")
    lo, hi = -4 * n, 4 * n
    ts: set[int] = set()
    while len(ts) < n:
        ts.add(rng.randint(lo, hi) if jitter else len(ts))
    pts = [(t, t * t) for t in sorted(ts)]
    ps = _try_build(pts)
    assert ps is not None
    return ps


def few_interior_set(n: int, interior: int, seed: int = 0,
                     max_tries: int = 256) -> PointSet:
    """Convex ring of n - interior points plus exactly ``interior`` inner points."""
    if interior < 0 or n - interior < 3:
        raise ValueError("need at least 3 hull points")
    rng = random.Random(f"few-interior-{n}-{interior}-{seed}")
    for _ in range(max_tries):
        hull_n = n - interior
        radius = 50 * n
        angles = sorted(rng.sample(range(0, 3600), hull_n))
        pts = [(round(radius * math.cos(math.radians(a / 10))),
                round(radius * math.sin(math.radians(a / 10))))
               for a in angles]
        inner_r = radius // 10
        pts += [(rng.randint(-inner_r, inner_r), rng.randint(-inner_r, inner_r))
                for _ in range(interior)]
        ps = _try_build(pts)
        if ps is not None and ps.interior_count == interior:
            return ps
    raise GeometryError(f"could not build a set with exactly {interior} interior points")


def ring_with_dents(n: int, dents: int, seed: int = 0, depth: float = 0.55,
                    max_tries: int = 256) -> PointSet:
    """Points on a rough circle with ``dents`` of them pulled inward, plus one
    near-center point; good at exercising reflex boundary vertices."""
    rng = random.Random(f"ring-{n}-{dents}-{seed}")
    for _ in range(max_tries):
        radius = 60 * n
        rim_n = n - 1
        angles = sorted(rng.sample(range(0, 7200), rim_n))
        dent_at = set(rng.sample(range(rim_n), min(dents, rim_n)))
        pts = []
        for i, a in enumerate(angles):
            r = radius * (depth + rng.random() * 0.08) if i in dent_at \
                else radius * (0.92 + rng.random() * 0.08)
            th = math.radians(a / 20)
            pts.append((round(r * math.cos(th)), round(r * math.sin(th))))
        pts.append((rng.randint(-radius // 20, radius // 20),
                    rng.randint(-radius // 20, radius // 20)))
        ps = _try_build(pts)
        if ps is not None and ps.interior_count >= dents // 2 + 1:
            return ps
    raise GeometryError("could not build a dented ring")


def _spread_angles(rng: random.Random, lo: float, hi: float, count: int,
                   jitter: float = 0.35) -> list[float]:
    """Roughly even angles in (lo, hi), jittered but order-preserving."""
    if count <= 0:
        return []
    step = (hi - lo) / (count + 1)
    return [lo + step * (i + 1) + rng.uniform(-jitter, jitter) * step
            for i in range(count)]


def _ring_points(radius: float, angles_and_depths) -> list[tuple[int, int]]:
    pts = []
    for a, depth in angles_and_depths:
        th = math.radians(a)
        pts.append((round(radius * depth * math.cos(th)),
                    round(radius * depth * math.sin(th))))
    return pts


def _assemble(n: int, rng: random.Random, features, ring_windows,
              expect_interior: int) -> PointSet | None:
    """Strictly convex ring (even spacing, huge radius) plus inward features
    and one leftmost near-center point that becomes the wheel hub."""
    radius = 3000 * n
    ring_n = n - 1 - len(features)
    weights = [hi - lo for lo, hi in ring_windows]
    total_w = sum(weights)
    spec = list(features)
    remaining = ring_n
    for w_i, (lo, hi) in enumerate(ring_windows):
        cnt = round(ring_n * weights[w_i] / total_w) if w_i < len(ring_windows) - 1 \
            else remaining
        cnt = min(cnt, remaining)
        remaining -= cnt
        spec += [(a, 1.0) for a in _spread_angles(rng, lo, hi, cnt)]
    pts = _ring_points(radius, spec)
    pts.append((round(-0.05 * radius) + rng.randint(-3, 3), rng.randint(-3, 3)))
    ps = _try_build(pts)
    if ps is None or ps.interior_count != expect_interior:
        return None
    return ps


def staircase_ring_set(n: int, seed: int = 0, max_tries: int = 64) -> PointSet:
    """Ring with a deep/shallow/deep spike triple: the middle spike is cut
    only after both flanks, so its triangle touches no original boundary edge."""
    rng = random.Random(f"stair-ring-{n}-{seed}")
    for _ in range(max_tries):
        features = [(5.0, 0.40), (0.0, 0.75), (-5.0, 0.40)]
        ps = _assemble(n, rng, features, [(12.0, 348.0)], expect_interior=4)
        if ps is not None:
            return ps
    raise GeometryError("could not build a staircase ring")


def cluster_dent_set(n: int, dents: int, seed: int = 0, max_tries: int = 64) -> PointSet:
    """Dense convex cluster flanked by ``dents`` separated spikes, plus one
    spike on the far side that the cutting sweep never reaches; the longest
    free arc (the cluster) then survives inside the active path."""
    rng = random.Random(f"cluster-dent-{n}-{dents}-{seed}")
    for _ in range(max_tries):
        cluster_lo, cluster_hi = -20.0, 16.0
        features = [(-90.0, 0.50)]          # unreached spike
        features += [(20.0 + 26.0 * i, 0.45) for i in range(dents - 1)]
        features += [(-24.0, 0.45)]
        cluster_n = (n * 55) // 100
        ring_hi = 20.0 + 26.0 * (dents - 1)
        features += [(a, 1.0) for a in _spread_angles(rng, cluster_lo, cluster_hi, cluster_n)]
        ps = _assemble(n, rng, features,
                       [(ring_hi + 6.0, 258.0)], expect_interior=dents + 2)
        if ps is not None:
            return ps
    raise GeometryError("could not build a cluster-dent set")


def staircase_cluster_set(n: int, seed: int = 0, max_tries: int = 64) -> PointSet:
    """Staircase spike triple plus a far dent and a dense cluster between
    them: the middle spike is cut last (no boundary edge) and the longest
    free arc survives inside the active path."""
    rng = random.Random(f"stair-cluster-{n}-{seed}")
    for _ in range(max_tries):
        features = [(44.0, 0.40), (40.0, 0.75), (36.0, 0.40), (-40.0, 0.45)]
        cluster_n = (n * 52) // 100
        features += [(a, 1.0) for a in _spread_angles(rng, -36.0, 32.0, cluster_n)]
        ps = _assemble(n, rng, features, [(50.0, 316.0)], expect_interior=5)
        if ps is not None:
            return ps
    raise GeometryError("could not build a staircase-cluster set")


GENERATORS = {
    "uniform": lambda n, seed: random_point_set(n, seed),
    "convex": lambda n, seed: convex_position_set(n, seed),
    "ring3": lambda n, seed: ring_with_dents(n, 3, seed),
    "ring6": lambda n, seed: ring_with_dents(n, 6, seed),
    "stair": staircase_ring_set,
    "cluster2": lambda n, seed: cluster_dent_set(n, 2, seed),
    "cluster3": lambda n, seed: cluster_dent_set(n, 3, seed),
    "staircluster": staircase_cluster_set,
}
