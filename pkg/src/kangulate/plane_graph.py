"""Combinatorial plane graphs over integer point sets.

Rotation systems are always derived from coordinates (clockwise angular order
of incident segments at each vertex), never stored independently.  Faces are
the orbits of next = rotation-successor-of-twin; with clockwise rotations the
internal face orbits run counterclockwise and the outer face orbit runs
clockwise, so the outer face is the unique orbit with negative signed area.
We locate it without area arithmetic via the reflex angular gap at the
lexicographically smallest drawn vertex.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .geom import (
    ANGLE_SAFE_GAP,
    CollinearTriple,
    GeometryError,
    PointSet,
    _angle_class,
    _cmp_clockwise,
    clockwise_angle_key,
)


class PlaneGraphError(GeometryError):
    pass


class CrossingEdges(PlaneGraphError):
    def __init__(self, e1: tuple[int, int], e2: tuple[int, int]):
        super().__init__(f"edges {e1} and {e2} cross")
        self.edges = (e1, e2)


class VertexOnEdge(PlaneGraphError):
    def __init__(self, v: int, e: tuple[int, int]):
        super().__init__(f"vertex {v} lies inside edge {e}")
        self.vertex = v
        self.edge = e


class NotTwoConnected(PlaneGraphError):
    pass


def _canonical_edges(n: int, edges: Iterable) -> np.ndarray:
    if isinstance(edges, np.ndarray) and edges.ndim == 2:
        arr = edges.astype(np.int64, copy=True)
    else:
        arr = np.asarray([(int(u), int(v)) for u, v in edges], dtype=np.int64)
    if arr.size == 0:
        raise PlaneGraphError("a plane graph needs at least one edge")
    if np.any(arr < 0) or np.any(arr >= n):
        raise PlaneGraphError("edge endpoint out of range")
    if np.any(arr[:, 0] == arr[:, 1]):
        raise PlaneGraphError("self-loops are not allowed")
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    key = lo * (n + 1) + hi
    order = np.argsort(key, kind="stable")
    key = key[order]
    if np.any(key[1:] == key[:-1]):
        raise PlaneGraphError("duplicate edge")
    return np.stack([lo[order], hi[order]], axis=1)


def _build_rotation(xy: np.ndarray, origin: np.ndarray, target: np.ndarray,
                    d: np.ndarray):
    """Half-edge rotation order: clockwise around each origin, exactly verified."""
    h = origin.shape[0]
    # one composite key: origin-major, then clockwise angle surrogate in
    # [0, 4).  origin * 8 leaves room; float64 keeps ~1e-10 key resolution
    # even at the largest origins, and closer ties are re-checked exactly.
    combined = origin.astype(np.float64) * 8.0 + clockwise_angle_key(d)
    order = np.argsort(combined, kind="stable")

    o_s = origin[order]
    same_block = o_s[1:] == o_s[:-1]
    cls = _angle_class(d)[order]
    cls_step = np.diff(cls.astype(np.int8))
    bad_origin: set[int] = set()
    for i in np.flatnonzero(same_block & (cls_step < 0)):
        bad_origin.add(int(o_s[i]))
    key_s = combined[order]
    near = same_block & (cls_step == 0) & (np.diff(key_s) < ANGLE_SAFE_GAP)
    eq = np.flatnonzero(near)
    if eq.size:
        a, b = d[order[eq]], d[order[eq + 1]]
        cr = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
        zero = cr == 0
        if np.any(zero):
            i = int(eq[np.flatnonzero(zero)[0]])
            raise CollinearTriple(int(o_s[i]), int(target[order[i]]), int(target[order[i + 1]]))
        for i in eq[cr > 0]:
            bad_origin.add(int(o_s[i]))
    if bad_origin:
        order = _exact_resort(xy, origin, target, order, bad_origin)
        o_s = origin[order]

    # cyclic successor within each origin block
    newblock = np.empty(h, dtype=bool)
    newblock[0] = True
    np.not_equal(o_s[1:], o_s[:-1], out=newblock[1:])
    pos_new = np.flatnonzero(newblock)
    block_id = np.cumsum(newblock) - 1
    starts = pos_new[block_id]
    counts = np.bincount(block_id)
    ends = starts + counts[block_id]
    nxt_pos = np.arange(h) + 1
    wrap = nxt_pos == ends
    nxt_pos[wrap] = starts[wrap]
    rot_next = np.empty(h, dtype=np.int64)
    rot_next[order] = order[nxt_pos]
    return order, rot_next, o_s


def _exact_resort(xy, origin, target, order, bad_origin):
    order = list(order)
    by_origin: dict[int, list[int]] = {}
    for pos, he in enumerate(order):
        o = int(origin[he])
        if o in bad_origin:
            by_origin.setdefault(o, []).append(pos)
    for o, positions in by_origin.items():
        hes = [order[p] for p in positions]
        dirs = {he: (int(xy[target[he], 0] - xy[o, 0]), int(xy[target[he], 1] - xy[o, 1]))
                for he in hes}
        hes.sort(key=functools.cmp_to_key(lambda a, b: _cmp_clockwise(dirs[a], dirs[b])))
        for p, he in zip(positions, hes):
            order[p] = he
    return np.asarray(order, dtype=np.int64)


def _face_labels(face_next: np.ndarray) -> np.ndarray:
    """Minimum half-edge id on each orbit of face_next, by pointer jumping."""
    h = face_next.shape[0]
    label = np.arange(h, dtype=np.int64)
    jump = face_next.copy()
    rounds = max(1, int(np.ceil(np.log2(max(h, 2)))) + 1)
    for _ in range(rounds):
        label = np.minimum(label, label[jump])
        jump = jump[jump]
    return label


class PlaneGraph:
    """Immutable plane graph; construction happens in make_plane_graph."""

    def __init__(self, ps: PointSet, edges: np.ndarray):
        self.point_set = ps
        self.xy = ps.xy
        self.edges = edges
        e = edges.shape[0]
        h = 2 * e
        self.origin = np.empty(h, dtype=np.int64)
        self.target = np.empty(h, dtype=np.int64)
        self.origin[0::2] = edges[:, 0]
        self.target[0::2] = edges[:, 1]
        self.origin[1::2] = edges[:, 1]
        self.target[1::2] = edges[:, 0]
        self.degrees = np.bincount(self.origin, minlength=ps.n)
        self.dangling = tuple(int(v) for v in np.flatnonzero(self.degrees <= 1))

        d_edge = self.xy[edges[:, 1]] - self.xy[edges[:, 0]]
        d = np.empty((h, 2), dtype=np.int64)
        d[0::2] = d_edge
        d[1::2] = -d_edge
        self.rot_order, self.rot_next, self._rot_origin = _build_rotation(
            self.xy, self.origin, self.target, d)
        self.face_next = self.rot_next[np.arange(h, dtype=np.int64) ^ 1]
        labels = _face_labels(self.face_next)
        reps, self.face_id = np.unique(labels, return_inverse=True)
        self.face_reps = reps
        self.face_count = reps.shape[0]
        self.face_sizes = np.bincount(self.face_id)
        self.outer_face = self._find_outer_face()
        self._cycles: dict[int, list[int]] = {}

    # -- structure ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.point_set.n

    @property
    def edge_count(self) -> int:
        return self.edges.shape[0]

    def _find_outer_face(self) -> int:
        drawn = np.flatnonzero(self.degrees >= 1)
        xs = self.xy[drawn, 0]
        at_min_x = drawn[xs == xs.min()]
        p_star = int(at_min_x[np.argmin(self.xy[at_min_x, 1])])
        # half-edges out of p_star in clockwise rotation order
        lo = int(np.searchsorted(self._rot_origin, p_star, side="left"))
        hi = int(np.searchsorted(self._rot_origin, p_star, side="right"))
        hes = self.rot_order[lo:hi]
        deg = hes.shape[0]
        if deg == 1:
            return int(self.face_id[int(hes[0]) ^ 1])
        d = self.xy[self.target[hes]] - self.xy[p_star]
        nxt = np.roll(d, -1, axis=0)
        cr = d[:, 0] * nxt[:, 1] - d[:, 1] * nxt[:, 0]
        gaps = np.flatnonzero(cr > 0)  # clockwise gap exceeding a half turn
        if gaps.size != 1:
            raise PlaneGraphError("could not identify the outer face at the extreme vertex")
        return int(self.face_id[int(hes[int(gaps[0])]) ^ 1])

    def rotation_at(self, v: int) -> np.ndarray:
        """Half-edges out of v in clockwise angular order."""
        lo = int(np.searchsorted(self._rot_origin, v, side="left"))
        hi = int(np.searchsorted(self._rot_origin, v, side="right"))
        return self.rot_order[lo:hi]

    def face_walk(self, f: int) -> list[int]:
        """Half-edge ids along the orbit of face f, starting at its representative."""
        start = int(self.face_reps[f])
        walk = [start]
        he = int(self.face_next[start])
        while he != start:
            walk.append(he)
            he = int(self.face_next[he])
        return walk

    def face_cycle(self, f: int) -> list[int]:
        """Vertices along face f's orbit (counterclockwise for internal faces)."""
        if f not in self._cycles:
            self._cycles[f] = [int(self.origin[he]) for he in self.face_walk(f)]
        return self._cycles[f]

    def internal_face_ids(self) -> list[int]:
        return [f for f in range(self.face_count) if f != self.outer_face]

    def outer_cycle(self) -> list[int]:
        """Outer boundary walk; clockwise for a connected graph."""
        return self.face_cycle(self.outer_face)

    def faces_of_edge(self, u: int, v: int) -> tuple[int, int]:
        idx = self._edge_index().get((min(u, v), max(u, v)))
        if idx is None:
            raise PlaneGraphError(f"no edge {(u, v)}")
        return int(self.face_id[2 * idx]), int(self.face_id[2 * idx + 1])

    def _edge_index(self) -> dict[tuple[int, int], int]:
        if not hasattr(self, "_eidx"):
            self._eidx = {(int(u), int(v)): i for i, (u, v) in enumerate(self.edges)}
        return self._eidx

    def edge_tuples(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edges]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[int(u)].append(int(v))
            adj[int(v)].append(int(u))
        return adj


def make_plane_graph(ps: PointSet, edges: Iterable, validate: bool = True) -> PlaneGraph:
    """Plane graph from coordinate-embedded edges.

    When ``validate`` is set, rejects pairwise properly-crossing segments and
    vertices lying inside non-incident segments.  Construction from an edge
    set already known to be plane may skip it.
    """
    arr = _canonical_edges(ps.n, edges)
    if validate:
        bad = find_drawing_violation(ps.xy, arr)
        if bad is not None:
            kind, payload = bad
            if kind == "crossing":
                raise CrossingEdges(*payload)
            raise VertexOnEdge(*payload)
    return PlaneGraph(ps, arr)


def internal_faces(g: PlaneGraph) -> list[list[int]]:
    """Each internal face as its clockwise vertex cycle."""
    return [list(reversed(g.face_cycle(f))) for f in g.internal_face_ids()]


# ---------------------------------------------------------------------------
# drawing validation
# ---------------------------------------------------------------------------

def _sign(a: np.ndarray) -> np.ndarray:
    return np.sign(a).astype(np.int8)


def find_drawing_violation(xy: np.ndarray, edges: np.ndarray, all_violations: bool = False):
    """First violation of plane-drawing validity, or None.

    Checks proper segment crossings and vertices in the relative interior of
    non-incident segments; shared endpoints are fine.
    """
    violations = []
    e = edges.shape[0]
    a = xy[edges[:, 0]]
    b = xy[edges[:, 1]]
    mins = np.minimum(a, b)
    maxs = np.maximum(a, b)
    order = np.argsort(mins[:, 0], kind="stable")
    for pos in range(e):
        i = int(order[pos])
        hi = maxs[i, 0]
        rest = order[pos + 1:]
        rest = rest[mins[rest, 0] <= hi]
        if rest.size == 0:
            continue
        rest = rest[(mins[rest, 1] <= maxs[i, 1]) & (maxs[rest, 1] >= mins[i, 1])]
        if rest.size == 0:
            continue
        shared = (
            (edges[rest, 0] == edges[i, 0]) | (edges[rest, 0] == edges[i, 1])
            | (edges[rest, 1] == edges[i, 0]) | (edges[rest, 1] == edges[i, 1])
        )
        rest = rest[~shared]
        if rest.size == 0:
            continue
        p, q = a[i], b[i]
        c, d = a[rest], b[rest]
        pq = q - p
        d1 = _sign(pq[0] * (c[:, 1] - p[1]) - pq[1] * (c[:, 0] - p[0]))
        d2 = _sign(pq[0] * (d[:, 1] - p[1]) - pq[1] * (d[:, 0] - p[0]))
        cd = d - c
        d3 = _sign(cd[:, 0] * (p[1] - c[:, 1]) - cd[:, 1] * (p[0] - c[:, 0]))
        d4 = _sign(cd[:, 0] * (q[1] - c[:, 1]) - cd[:, 1] * (q[0] - c[:, 0]))
        crossing = (d1 * d2 < 0) & (d3 * d4 < 0)
        if np.any(crossing):
            j = int(rest[np.flatnonzero(crossing)[0]])
            v = ("crossing", ((int(edges[i, 0]), int(edges[i, 1])),
                              (int(edges[j, 0]), int(edges[j, 1]))))
            if not all_violations:
                return v
            violations.append(v)

    # vertices inside non-incident segments
    n = xy.shape[0]
    for i in range(e):
        u, v = int(edges[i, 0]), int(edges[i, 1])
        p, q = xy[u], xy[v]
        pq = q - p
        cr = pq[0] * (xy[:, 1] - p[1]) - pq[1] * (xy[:, 0] - p[0])
        on_line = np.flatnonzero(cr == 0)
        for w in on_line:
            w = int(w)
            if w in (u, v):
                continue
            t = pq[0] * (xy[w, 0] - p[0]) + pq[1] * (xy[w, 1] - p[1])
            if 0 < t < pq[0] * pq[0] + pq[1] * pq[1]:
                viol = ("vertex", (w, (u, v)))
                if not all_violations:
                    return viol
                violations.append(viol)
    if all_violations:
        return violations
    return None


def validate_drawing(g: PlaneGraph, ps: PointSet | None = None) -> bool:
    """True iff the drawn segments are pairwise non-crossing and no vertex
    sits in the relative interior of a non-incident segment."""
    xy = ps.xy if ps is not None else g.xy
    return find_drawing_violation(xy, g.edges) is None


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def two_connected_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    """Low-point test: >= 3 vertices, connected, no cut vertex."""
    if n < 3 or len(edges) < 3:
        return False
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[int(u)].append(int(v))
        adj[int(v)].append(int(u))
    if any(not a for a in adj):
        return False

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    root_children = 0
    stack = [(0, iter(adj[0]))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return False
    if timer != n:
        return False  # disconnected
    return root_children <= 1


def is_two_connected(g: PlaneGraph) -> bool:
    return two_connected_from_edges(g.vertex_count, g.edge_tuples())


# ---------------------------------------------------------------------------
# weak dual and block partitions
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class WeakDual:
    """Dual of the internal faces; dual edges keep their primal edge labels."""

    graph: PlaneGraph
    nodes: list[int]                              # primal face ids
    node_of_face: dict[int, int]
    edge_list: list[tuple[int, int, tuple[int, int]]]  # (node a, node b, primal edge)
    adjacency: list[list[tuple[int, tuple[int, int]]]]
    inner_cycle: list[int] | None = None

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def neighbors(self, a: int) -> list[int]:
        return [b for b, _ in self.adjacency[a]]


def weak_dual(g: PlaneGraph, require_two_connected: bool = True) -> WeakDual:
    if require_two_connected and not is_two_connected(g):
        raise NotTwoConnected("weak dual requires a 2-connected plane graph")
    nodes = g.internal_face_ids()
    node_of_face = {f: i for i, f in enumerate(nodes)}
    edge_list = []
    adjacency: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in nodes]
    for ei in range(g.edge_count):
        f1 = int(g.face_id[2 * ei])
        f2 = int(g.face_id[2 * ei + 1])
        if f1 == g.outer_face or f2 == g.outer_face or f1 == f2:
            continue
        a, b = node_of_face[f1], node_of_face[f2]
        pe = (int(g.edges[ei, 0]), int(g.edges[ei, 1]))
        edge_list.append((min(a, b), max(a, b), pe))
        adjacency[a].append((b, pe))
        adjacency[b].append((a, pe))
    return WeakDual(graph=g, nodes=nodes, node_of_face=node_of_face,
                    edge_list=edge_list, adjacency=adjacency)


class BlockPartitionError(PlaneGraphError):
    pass


@dataclass(eq=False)
class BlockPartition:
    """Partition of a weak dual's nodes into connected tree blocks of k-2 nodes."""

    dual: WeakDual
    blocks: tuple[frozenset[int], ...]
    block_size: int

    def __post_init__(self):
        seen: set[int] = set()
        for blk in self.blocks:
            if len(blk) != self.block_size:
                raise BlockPartitionError(
                    f"block of size {len(blk)}, expected {self.block_size}")
            if blk & seen:
                raise BlockPartitionError("blocks overlap")
            seen |= blk
            self._check_tree(blk)
        if len(seen) != self.dual.node_count:
            raise BlockPartitionError("blocks do not cover the weak dual")

    def _check_tree(self, blk: frozenset[int]):
        internal = [(a, b) for a, b, _ in self.dual.edge_list if a in blk and b in blk]
        if len(internal) != len(blk) - 1:
            raise BlockPartitionError("block does not induce a tree")
        if len(blk) == 1:
            return
        adj: dict[int, list[int]] = {v: [] for v in blk}
        for a, b in internal:
            adj[a].append(b)
            adj[b].append(a)
        seen = set()
        todo = [next(iter(blk))]
        while todo:
            v = todo.pop()
            if v in seen:
                continue
            seen.add(v)
            todo.extend(adj[v])
        if len(seen) != len(blk):
            raise BlockPartitionError("block is not connected")

    def intra_block_primal_edges(self) -> list[tuple[int, int]]:
        member = {}
        for bi, blk in enumerate(self.blocks):
            for v in blk:
                member[v] = bi
        removed = []
        for a, b, pe in self.dual.edge_list:
            if member[a] == member[b]:
                removed.append(pe)
        return removed


def corresponding_subgraph(g: PlaneGraph, bp: BlockPartition) -> PlaneGraph:
    """Primal graph with the primal edges of all intra-block dual edges removed."""
    removed = {tuple(sorted(e)) for e in bp.intra_block_primal_edges()}
    kept = [e for e in g.edge_tuples() if e not in removed]
    return make_plane_graph(g.point_set, kept, validate=False)
