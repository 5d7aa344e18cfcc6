"""Exact integer geometry: orientation, convex hulls, radial orders, containment.

All predicates are decided with integer arithmetic only.  Coordinates are
bounded so that every 3-point orientation determinant fits in a signed 64-bit
word, which lets the hot paths run vectorized on int64 arrays without losing
exactness.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Sequence, NamedTuple

import numpy as np

# |x|, |y| < 2^30 keeps every int64 computation exact.  Cross products from a
# shared origin stay representable even at 2^30, but the squared segment
# length used by the vertex-on-edge test reaches +2^63 on the extreme
# diagonal, one past int64, and would wrap silently.
COORD_LIMIT = (1 << 30) - 1

# Full O(n^3) general-position scan is only affordable for small inputs;
# beyond this, collinearity is detected lazily by the predicates that care.
_FULL_GP_CHECK_MAX = 120


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class TooFewPoints(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


class CollinearTriple(GeometryError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"points {i}, {j}, {k} are collinear")
        self.indices = (i, j, k)


class CoordinateOutOfRange(GeometryError):
    pass


class NotInterior(GeometryError):
    pass


class Turn(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Point(NamedTuple):
    x: int
    y: int


def orientation(a, b, c) -> Turn:
    """Sign of the cross product (b-a) x (c-a), computed exactly."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return Turn.COUNTERCLOCKWISE
    if d < 0:
        return Turn.CLOCKWISE
    return Turn.COLLINEAR


def cross(o, a, b) -> int:
    """Raw cross product (a-o) x (b-o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class _PointView(Sequence):
    """Immutable sequence view of an (n, 2) int64 array as Point tuples."""

    __slots__ = ("_xy",)

    def __init__(self, xy: np.ndarray):
        self._xy = xy

    def __len__(self) -> int:
        return self._xy.shape[0]

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [Point(int(x), int(y)) for x, y in self._xy[i]]
        x, y = self._xy[i]
        return Point(int(x), int(y))

    def __iter__(self):
        for x, y in self._xy:
            yield Point(int(x), int(y))


@dataclass(eq=False, frozen=True)
class PointSet:
    """Input points with hull / interior classification.

    ``hull`` is the boundary of the convex hull in clockwise order starting
    at the lexicographically smallest hull point.  Index = vertex identity
    everywhere downstream.
    """

    xy: np.ndarray
    hull: tuple[int, ...]

    def __post_init__(self):
        self.xy.setflags(write=False)

    @property
    def n(self) -> int:
        return self.xy.shape[0]

    def __len__(self) -> int:
        return self.n

    @cached_property
    def points(self) -> Sequence[Point]:
        return _PointView(self.xy)

    @cached_property
    def hull_set(self) -> frozenset[int]:
        return frozenset(self.hull)

    @cached_property
    def interior(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.interior_mask))

    @cached_property
    def interior_mask(self) -> np.ndarray:
        mask = np.ones(self.n, dtype=bool)
        mask[list(self.hull)] = False
        mask.setflags(write=False)
        return mask

    @property
    def interior_count(self) -> int:
        return self.n - len(self.hull)

    def point(self, i: int) -> Point:
        x, y = self.xy[i]
        return Point(int(x), int(y))


def make_point_set(points: Iterable) -> PointSet:
    """Build a PointSet, computing the hull and rejecting degenerate input."""
    if isinstance(points, np.ndarray):
        arr = points.astype(np.int64, copy=True)
    else:
        pts = list(points)
        arr = np.array([(int(p[0]), int(p[1])) for p in pts], dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GeometryError("expected a sequence of (x, y) pairs")
    n = arr.shape[0]
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    if np.any(np.abs(arr) > COORD_LIMIT):
        raise CoordinateOutOfRange(f"coordinates must satisfy |x|,|y| <= {COORD_LIMIT}")

    order = np.lexsort((arr[:, 1], arr[:, 0]))
    same = np.all(arr[order[1:]] == arr[order[:-1]], axis=1)
    if np.any(same):
        at = int(np.flatnonzero(same)[0])
        i, j = sorted((int(order[at]), int(order[at + 1])))
        raise DuplicatePoint(i, j)

    hull = _convex_hull_cw(arr)
    if n <= _FULL_GP_CHECK_MAX:
        _check_general_position(arr)
    return PointSet(xy=arr, hull=hull)


def _check_general_position(arr: np.ndarray) -> None:
    """Exhaustive collinearity scan, O(n^3) but vectorized per anchor pair."""
    n = arr.shape[0]
    for i in range(n - 2):
        d = arr[i + 1:] - arr[i]
        # cross of (p_j - p_i) with (p_k - p_i) for all j < k
        cr = d[:, 0, None] * d[None, :, 1] - d[:, 1, None] * d[None, :, 0]
        ju, ku = np.triu_indices(n - i - 1, k=1)
        bad = np.flatnonzero(cr[ju, ku] == 0)
        if bad.size:
            b = int(bad[0])
            raise CollinearTriple(i, i + 1 + int(ju[b]), i + 1 + int(ku[b]))


def _lex_min_index(arr: np.ndarray, idx: np.ndarray) -> int:
    sub = arr[idx]
    order = np.lexsort((sub[:, 1], sub[:, 0]))
    return int(idx[order[0]])


def _convex_hull_cw(arr: np.ndarray) -> tuple[int, ...]:
    """Hull indices, clockwise, starting at the lexicographically smallest point."""
    n = arr.shape[0]
    if n > 4096:
        hull = _hull_qhull(arr)
        if hull is not None:
            return hull
    return _hull_monotone(arr)


def _hull_monotone(arr: np.ndarray) -> tuple[int, ...]:
    n = arr.shape[0]
    order = np.lexsort((arr[:, 1], arr[:, 0]))
    pts = [(int(arr[i, 0]), int(arr[i, 1]), int(i)) for i in order]

    def chain(seq):
        out = []
        for p in seq:
            while len(out) > 1:
                a, b = out[-2], out[-1]
                d = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
                if d == 0:
                    raise CollinearTriple(*sorted((a[2], b[2], p[2])))
                if d < 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = chain(pts)          # counterclockwise lower chain
    upper = chain(pts[::-1])    # counterclockwise upper chain
    ccw = [p[2] for p in lower[:-1]] + [p[2] for p in upper[:-1]]
    if len(ccw) < 3:
        raise CollinearTriple(int(order[0]), int(order[1]), int(order[2]))
    cw = [ccw[0]] + ccw[:0:-1]  # reverse, keeping the lex-min start
    return tuple(cw)


def _hull_qhull(arr: np.ndarray):
    """Qhull-backed hull with exact verification; None if unverifiable."""
    try:
        from scipy.spatial import ConvexHull
        hull = ConvexHull(arr.astype(np.float64))
    except Exception:
        return None
    idx = hull.vertices.astype(np.int64)  # counterclockwise
    h = idx.size
    if h < 3:
        return None
    a = arr[idx]
    b = arr[np.roll(idx, -1)]
    c = arr[np.roll(idx, -2)]
    turn = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
    if not np.all(turn > 0):
        return None
    # every point strictly inside or a hull vertex
    inside = np.ones(arr.shape[0], dtype=bool)
    for i in range(h):
        p, q = arr[idx[i]], arr[np.roll(idx, -1)[i]]
        cr = (q[0] - p[0]) * (arr[:, 1] - p[1]) - (q[1] - p[1]) * (arr[:, 0] - p[0])
        inside &= cr > 0
    inside[idx] = True
    if not np.all(inside):
        return None
    cw = idx[::-1]
    sub = arr[cw]
    pos = int(np.lexsort((sub[:, 1], sub[:, 0]))[0])
    cw = np.roll(cw, -pos)
    return tuple(int(i) for i in cw)


# ---------------------------------------------------------------------------
# Angular sorting
# ---------------------------------------------------------------------------

def _angle_class(d: np.ndarray) -> np.ndarray:
    """Exact class matching clockwise-from-(-x) order: (-x axis, upper, +x axis, lower)."""
    x, y = d[:, 0], d[:, 1]
    cls = np.empty(d.shape[0], dtype=np.int8)
    cls[(y == 0) & (x < 0)] = 0
    cls[y > 0] = 1
    cls[(y == 0) & (x > 0)] = 2
    cls[y < 0] = 3
    return cls


# float key gaps above this are provably ordered correctly (the pseudo-angle
# of exactly representable integer directions errs by well under 1e-12);
# only closer pairs need an exact integer re-check
ANGLE_SAFE_GAP = 1e-9


def clockwise_angle_key(d: np.ndarray) -> np.ndarray:
    """Monotone clockwise angle surrogate in [0, 4): 0 at the -x axis, 1 at
    +y, 2 at +x, 3 at -y.  Ascending key = clockwise sweep starting just
    below the -x axis, matching _angle_class order."""
    dx = d[:, 0].astype(np.float64)
    dy = d[:, 1].astype(np.float64)
    t = dy / (np.abs(dx) + np.abs(dy))
    p = np.where(d[:, 0] >= 0, t, 2.0 - t)   # counterclockwise in [-1, 3)
    key = 2.0 - p
    np.add(key, 4.0, out=key, where=key < 0)
    return key


def _cmp_clockwise(d1, d2) -> int:
    """Exact comparator: negative if d1 strictly precedes d2 in clockwise order."""
    def klass(d):
        x, y = d
        if y == 0:
            return 0 if x < 0 else 2
        return 1 if y > 0 else 3

    c1, c2 = klass(d1), klass(d2)
    if c1 != c2:
        return -1 if c1 < c2 else 1
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    if cr == 0:
        return 0
    return -1 if cr < 0 else 1


def angular_sort_cw(xy: np.ndarray, center: np.ndarray, idx: np.ndarray) -> np.ndarray:
    """Sort indices clockwise around ``center`` (descending atan2 order).

    A float atan2 key does the heavy lifting; the result is then verified
    pairwise with exact integer arithmetic, falling back to an exact
    comparator sort when float resolution is insufficient.
    """
    idx = np.asarray(idx, dtype=np.int64)
    d = xy[idx] - center
    if np.any((d[:, 0] == 0) & (d[:, 1] == 0)):
        raise GeometryError("cannot angular-sort the center itself")
    key = clockwise_angle_key(d)
    order = np.argsort(key, kind="stable")
    sorted_idx = idx[order]
    if _verify_cw_order(xy, center, sorted_idx, key[order]):
        return sorted_idx
    # rare: near-parallel directions beyond float resolution
    dirs = {int(i): (int(xy[i, 0] - center[0]), int(xy[i, 1] - center[1])) for i in idx}
    import functools
    exact = sorted((int(i) for i in idx),
                   key=functools.cmp_to_key(lambda a, b: _cmp_clockwise(dirs[a], dirs[b])))
    out = np.array(exact, dtype=np.int64)
    if not _verify_cw_order(xy, center, out):
        raise GeometryError("angular order is not strict; collinear directions present")
    return out


def _verify_cw_order(xy: np.ndarray, center: np.ndarray, sorted_idx: np.ndarray,
                     sorted_key: np.ndarray | None = None) -> bool:
    d = xy[sorted_idx] - center
    cls = _angle_class(d)
    step = np.diff(cls)
    if np.any(step < 0):
        return False
    same = step == 0
    if sorted_key is not None:
        same = same & (np.diff(sorted_key) < ANGLE_SAFE_GAP)
    same = np.flatnonzero(same)
    if same.size:
        a, b = d[same], d[same + 1]
        cr = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        if np.any(cr >= 0):
            return False
    return True


def radial_order(ps: PointSet, z: int) -> list[int]:
    """All indices except z, clockwise around z, starting at the lex-smallest point.

    Requires z interior; general position makes ties impossible, and any
    collinearity with z is reported rather than tie-broken.
    """
    if z not in ps.interior:
        raise NotInterior(f"vertex {z} is not an interior point")
    idx = np.array([i for i in range(ps.n) if i != z], dtype=np.int64)
    ordered = angular_sort_cw(ps.xy, ps.xy[z], idx)
    # cyclic sanity: consecutive angular gaps must all be under a half turn,
    # which holds exactly when z lies interior to the remaining points
    d = ps.xy[ordered] - ps.xy[z]
    nxt = np.roll(d, -1, axis=0)
    cr = d[:, 0] * nxt[:, 1] - d[:, 1] * nxt[:, 0]
    zero = np.flatnonzero(cr == 0)
    if zero.size:
        i = int(zero[0])
        raise CollinearTriple(z, int(ordered[i]), int(ordered[(i + 1) % len(ordered)]))
    if np.any(cr > 0):
        raise GeometryError("radial order has a gap exceeding a half turn; z not interior?")
    start = _lex_min_index(ps.xy, ordered)
    pos = int(np.flatnonzero(ordered == start)[0])
    return [int(i) for i in np.roll(ordered, -pos)]


def in_convex_hull(q, pts: Sequence) -> bool:
    """True iff q lies strictly inside the convex hull of pts (boundary excluded)."""
    if len(pts) < 3:
        raise GeometryError("need at least 3 points for a containment test")
    arr = np.array([(int(p[0]), int(p[1])) for p in pts], dtype=np.int64)
    try:
        hull = _hull_monotone(arr)
    except CollinearTriple:
        # degenerate hull encloses nothing
        return False
    qx, qy = int(q[0]), int(q[1])
    for i in range(len(hull)):
        a = arr[hull[i]]
        b = arr[hull[(i + 1) % len(hull)]]
        d = (int(b[0]) - int(a[0])) * (qy - int(a[1])) - (int(b[1]) - int(a[1])) * (qx - int(a[0]))
        if d >= 0:  # hull is clockwise; strict interior keeps every edge turn clockwise
            return False
    return True
