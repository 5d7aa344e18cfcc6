"""Wheel triangulation and the outer-boundary construction machinery.

The wheel around an interior vertex z is grown by repeatedly cutting off
reflex vertices of the shrinking outer cycle; the cycle stays star-shaped
about z throughout, which is what makes every inserted edge crossing-free
(checked under KANGULATE_DEBUG_ASSERTS).  Pontoons retriangulate the convex
region over a good boundary path so the added triangles join up in the weak
dual.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ._debug import debug_asserts_enabled
from .geom import (
    GeometryError,
    PointSet,
    Turn,
    in_convex_hull,
    orientation,
    radial_order,
)
from .plane_graph import PlaneGraph, make_plane_graph


class ConstructionError(GeometryError):
    """An internal construction invariant failed.

    For inputs inside the guaranteed range (n >= 2k^2) this indicates a bug;
    below it, the orchestrator reports an honest failure instead.
    """


class VertexNotOnCycle(GeometryError):
    pass


class CannotAddTriangles(ConstructionError):
    pass


class NoValidA(ConstructionError):
    pass


class BadPath(GeometryError):
    pass


# ---------------------------------------------------------------------------
# boundary cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryCycle:
    """Simple polygon through point indices, clockwise, with reflex flags.

    A vertex is reflex when the polygon turns counterclockwise there under
    clockwise traversal: a triangle can be cut off on the outside.
    """

    vertices: tuple[int, ...]
    reflex_flags: tuple[bool, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def predecessor(self, v: int) -> int:
        i = self._pos(v)
        return self.vertices[(i - 1) % len(self.vertices)]

    def successor(self, v: int) -> int:
        i = self._pos(v)
        return self.vertices[(i + 1) % len(self.vertices)]

    def _pos(self, v: int) -> int:
        if v not in self.position:
            raise VertexNotOnCycle(f"vertex {v} not on the cycle")
        return self.position[v]

    def reflex_vertices(self) -> list[int]:
        return [v for v, r in zip(self.vertices, self.reflex_flags) if r]


def boundary_cycle(ps: PointSet, vertices: Sequence[int]) -> BoundaryCycle:
    verts = tuple(int(v) for v in vertices)
    n = len(verts)
    flags = []
    for i, v in enumerate(verts):
        p = verts[(i - 1) % n]
        s = verts[(i + 1) % n]
        flags.append(orientation(ps.point(p), ps.point(v), ps.point(s))
                     == Turn.COUNTERCLOCKWISE)
    return BoundaryCycle(verts, tuple(flags))


def is_reflex(c: BoundaryCycle, v: int) -> bool:
    return c.reflex_flags[c._pos(v)]


# ---------------------------------------------------------------------------
# wheel triangulation
# ---------------------------------------------------------------------------

def wheel_edge_list(ps: PointSet, rim: Sequence[int], z: int) -> list[tuple[int, int]]:
    edges = [(z, v) for v in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return edges


def wheel_triangulation(ps: PointSet, z: int) -> PlaneGraph:
    """Spokes from z to every other point plus the radial-order cycle."""
    rim = radial_order(ps, z)
    return make_plane_graph(ps, wheel_edge_list(ps, rim, z), validate=False)


def maximal_bad_path(c: BoundaryCycle, z: int, ps: PointSet) -> list[int] | None:
    """The unique maximal convex path whose closure's hull captures z, if any.

    Two disjoint such paths would each span more than a half turn at z, which
    is impossible; the uniqueness is asserted.  With no reflex vertex on the
    cycle there is no canonical maximal convex path (the construction never
    consults one in that regime) and None is returned.
    """
    n = len(c)
    reflex_pos = [i for i, r in enumerate(c.reflex_flags) if r]
    if not reflex_pos:
        return None
    bad: list[list[int]] = []
    for idx, rp in enumerate(reflex_pos):
        nxt_rp = reflex_pos[(idx + 1) % len(reflex_pos)]
        run_len = (nxt_rp - rp - 1) % n
        if len(reflex_pos) == 1:
            run_len = n - 1
        if run_len == 0:
            continue
        run = [c.vertices[(rp + 1 + t) % n] for t in range(run_len)]
        closure_idx = [c.vertices[rp]] + run + [c.vertices[nxt_rp]]
        if _is_bad_closure(ps, z, run, closure_idx, n):
            bad.append(run)
    assert len(bad) <= 1, "more than one maximal bad convex path"
    return bad[0] if bad else None


def _is_bad_closure(ps: PointSet, z: int, run: list[int], closure: list[int], n: int) -> bool:
    if len(run) >= n - 1:
        return True
    pts = [ps.point(v) for v in dict.fromkeys(closure)]
    if len(pts) < 3:
        return False
    return in_convex_hull(ps.point(z), pts)


def path_is_good(ps: PointSet, z: int, path: Sequence[int], pred: int, succ: int,
                 cycle_len: int) -> bool:
    """Good = a pontoon can be built: z outside the convex hull of the closure."""
    closure = [pred] + list(path) + [succ]
    return not _is_bad_closure(ps, z, list(path), closure, cycle_len)


# ---------------------------------------------------------------------------
# triangle additions (the clockwise cutting loop)
# ---------------------------------------------------------------------------

@dataclass
class AdditionRecord:
    """Everything the later phases need about the added triangles."""

    z: int
    rim: list[int]
    start_vertex: int
    S: list[int]                      # in addition order
    triangles: list[tuple[int, int, int]]   # (u, v, w): v cut off, uw inserted
    chords: list[tuple[int, int]]
    supports: list[tuple[tuple[int, int], tuple[int, int]]]  # (uv, vw) at cut time
    shares_rim_edge: list[bool]
    support_faces: list[tuple[tuple, tuple]]  # ('wheel', i) or ('tri', t)
    final_boundary: list[int]
    steps: int = 0

    @property
    def S_set(self) -> frozenset[int]:
        return frozenset(self.S)

    def triangle_of_site(self) -> dict[int, int]:
        return {v: t for t, v in enumerate(self.S)}


def run_additions(ps: PointSet, rim: Sequence[int], z: int,
                  bad_path: Sequence[int] | None, m: int) -> AdditionRecord:
    """Cut m reflex vertices off the outer cycle, clockwise, recording the dual wiring."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rim = [int(v) for v in rim]
    n_r = len(rim)
    pos = {v: i for i, v in enumerate(rim)}
    nxt = {rim[i]: rim[(i + 1) % n_r] for i in range(n_r)}
    prv = {rim[i]: rim[(i - 1) % n_r] for i in range(n_r)}
    orig_nxt = dict(nxt)

    def reflex_now(v: int) -> bool:
        return orientation(ps.point(prv[v]), ps.point(v), ps.point(nxt[v])) \
            == Turn.COUNTERCLOCKWISE

    def is_rim_edge(a: int, b: int) -> bool:
        return orig_nxt.get(a) == b or orig_nxt.get(b) == a

    if bad_path:
        candidates = list(bad_path)
    else:
        candidates = [v for v in rim if not reflex_now(v)]
    if not candidates:
        raise CannotAddTriangles("no admissible start vertex")
    start = min(candidates, key=lambda v: ps.point(v))

    rec = AdditionRecord(z=z, rim=rim, start_vertex=start, S=[], triangles=[],
                         chords=[], supports=[], shares_rim_edge=[],
                         support_faces=[], final_boundary=[])
    chord_owner: dict[tuple[int, int], int] = {}

    def face_across(a: int, b: int):
        if is_rim_edge(a, b):
            i = pos[a] if orig_nxt[a] == b else pos[b]
            return ("wheel", i)
        return ("tri", chord_owner[(min(a, b), max(a, b))])

    debug = debug_asserts_enabled()
    v = start
    steps = 0
    limit = (m + 2) * n_r + 16
    alive = n_r
    while len(rec.S) < m:
        steps += 1
        if steps > limit or alive <= 3:
            raise CannotAddTriangles(
                f"boundary became convex after {len(rec.S)} of {m} additions")
        u, w = prv[v], nxt[v]
        if reflex_now(v):
            t = len(rec.S)
            rec.S.append(v)
            rec.triangles.append((u, v, w))
            rec.chords.append((min(u, w), max(u, w)))
            rec.supports.append(((u, v), (v, w)))
            rec.shares_rim_edge.append(is_rim_edge(u, v) or is_rim_edge(v, w))
            rec.support_faces.append((face_across(u, v), face_across(v, w)))
            chord_owner[(min(u, w), max(u, w))] = t
            nxt[u] = w
            prv[w] = u
            del nxt[v], prv[v]
            alive -= 1
            if debug:
                _debug_check_star_shaped(ps, z, nxt, u)
                _debug_check_forest(rec, n_r)
        v = w
    rec.steps = steps
    cur = min(nxt)
    boundary = [cur]
    while nxt[boundary[-1]] != cur:
        boundary.append(nxt[boundary[-1]])
    rec.final_boundary = boundary
    return rec


def add_triangles(g: PlaneGraph, c: BoundaryCycle, z: int, m: int):
    """Public wrapper: returns the augmented triangulation and the record."""
    ps = g.point_set
    bad = maximal_bad_path(c, z, ps)
    rec = run_additions(ps, list(c.vertices), z, bad, m)
    edges = g.edge_tuples() + [tuple(ch) for ch in rec.chords]
    return make_plane_graph(ps, edges, validate=False), rec


def _debug_check_star_shaped(ps: PointSet, z: int, nxt: dict[int, int], anchor: int):
    boundary = [anchor]
    while nxt[boundary[-1]] != anchor:
        boundary.append(nxt[boundary[-1]])
    zp = ps.point(z)
    edges = [(boundary[i], boundary[(i + 1) % len(boundary)]) for i in range(len(boundary))]
    for cvert in boundary:
        cp = ps.point(cvert)
        for a, b in edges:
            if cvert in (a, b):
                continue
            pa, pb = ps.point(a), ps.point(b)
            d1 = orientation(zp, cp, pa)
            d2 = orientation(zp, cp, pb)
            d3 = orientation(pa, pb, zp)
            d4 = orientation(pa, pb, cp)
            if d1 != d2 and d3 != d4 and Turn.COLLINEAR not in (d1, d2, d3, d4):
                raise AssertionError(
                    f"boundary lost star-shapedness: {cvert} hidden behind edge {(a, b)}")


def _debug_check_forest(rec: AdditionRecord, n_wheel: int):
    """Added triangles minus the inner cycle must form a complete binary forest
    whose leaves are wheel faces, consecutive on the inner cycle per tree."""
    t_count = len(rec.S)
    nodes = [("wheel", i) for i in range(n_wheel)] + [("tri", t) for t in range(t_count)]
    adj: dict[tuple, list[tuple]] = {x: [] for x in nodes}
    for t in range(t_count):
        for f in rec.support_faces[t]:
            adj[("tri", t)].append(f)
            adj[f].append(("tri", t))
    seen: set[tuple] = set()
    for root in nodes:
        if root in seen or not adj[root]:
            continue
        comp = []
        todo = [root]
        comp_edges = 0
        while todo:
            x = todo.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            comp_edges += len(adj[x])
            todo.extend(adj[x])
        comp_edges //= 2
        assert comp_edges == len(comp) - 1, "dual minus inner cycle has a cycle"
        wheel_leaves = sorted(i for kind, i in comp if kind == "wheel")
        for kind, i in comp:
            deg = len(adj[(kind, i)])
            if kind == "wheel":
                assert deg == 1, "wheel face with two added triangles on one edge"
            else:
                assert deg in (2, 3), "added triangle with wrong forest degree"
        roots = sum(1 for kind, i in comp if kind == "tri" and len(adj[(kind, i)]) == 2)
        assert roots == 1, "tree without a unique root"
        # leaves consecutive on the inner cycle
        gaps = 0
        L = len(wheel_leaves)
        for a in range(L):
            d = (wheel_leaves[(a + 1) % L] - wheel_leaves[a]) % n_wheel
            if d != 1:
                gaps += 1
        assert gaps <= 1, "tree leaves are not consecutive on the inner cycle"


# ---------------------------------------------------------------------------
# path selection
# ---------------------------------------------------------------------------

@dataclass
class Arc:
    """Maximal run of non-site vertices on the original cycle."""

    vertices: list[int]
    start_pos: int              # position on the original cycle

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class SelectedPaths:
    A: list[int]
    U: Arc
    W: Arc
    arcs: list[Arc]
    u_in_a: bool


def cycle_arcs(rim: Sequence[int], sites: frozenset[int]) -> list[Arc]:
    n = len(rim)
    s_positions = sorted(i for i, v in enumerate(rim) if v in sites)
    arcs: list[Arc] = []
    for a_i, p in enumerate(s_positions):
        q = s_positions[(a_i + 1) % len(s_positions)]
        gap = (q - p - 1) % n
        if len(s_positions) == 1:
            gap = n - 1
        if gap == 0:
            continue
        arcs.append(Arc([rim[(p + 1 + t) % n] for t in range(gap)], (p + 1) % n))
    return arcs


def _check_convex_runs_stay_contiguous(c: BoundaryCycle, sites: frozenset[int]):
    """Sites can only eat into a convex run from its ends (a strictly interior
    vertex turns reflex only after a neighbor is cut), so each maximal convex
    run minus the sites must stay a single path."""
    n = len(c)
    reflex_pos = [i for i, r in enumerate(c.reflex_flags) if r]
    if not reflex_pos:
        return
    for idx, rp in enumerate(reflex_pos):
        nxt_rp = reflex_pos[(idx + 1) % len(reflex_pos)]
        run_len = (nxt_rp - rp - 1) % n if len(reflex_pos) > 1 else n - 1
        free = [c.vertices[(rp + 1 + t) % n] not in sites for t in range(run_len)]
        blocks = sum(1 for i, f in enumerate(free)
                     if f and (i == 0 or not free[i - 1]))
        if blocks > 1:
            raise ConstructionError("sites split a convex run into several paths")


def select_paths(c: BoundaryCycle, S: Sequence[int], B: Sequence[int] | None,
                 ps: PointSet, z: int, k: int) -> SelectedPaths:
    """A = cycle minus the longest excluded arc subject to the three properties:
    it keeps every site, no leftover reflex vertex, and avoids the bad path."""
    rim = list(c.vertices)
    n_r = len(rim)
    sites = frozenset(int(v) for v in S)
    arcs = cycle_arcs(rim, sites)
    if not arcs:
        raise NoValidA("no free arc on the cycle")
    _check_convex_runs_stay_contiguous(c, sites)

    member_of = {}
    for idx, arc in enumerate(arcs):
        for v in arc.vertices:
            member_of[v] = idx

    reflex_left = [v for v in c.reflex_vertices() if v not in sites]
    forced: set[int] = set()
    for v in reflex_left:
        forced.add(member_of[v])
    b_left = [v for v in (B or []) if v not in sites]
    for v in b_left:
        forced.add(member_of[v])
    if len(forced) > 1:
        raise NoValidA("leftover reflex vertices and bad path lie in different arcs")

    if forced:
        candidates = [arcs[forced.pop()]]
    else:
        candidates = sorted(arcs, key=lambda a: (-len(a), a.start_pos))
    W = candidates[0]

    max_len = max(len(a) for a in arcs)
    if len(W) == max_len:
        U = W
    else:
        U = sorted((a for a in arcs if len(a) == max_len),
                   key=lambda a: a.start_pos)[0]

    w_end_pos = (W.start_pos + len(W) - 1) % n_r
    a_len = n_r - len(W)
    A = [rim[(w_end_pos + 1 + t) % n_r] for t in range(a_len)]
    if A[0] not in sites or A[-1] not in sites:
        raise NoValidA("excluded arc is not flanked by sites")

    n = ps.n
    if n >= 2 * k * k:
        assert len(U) > 2 * k, f"longest free arc has {len(U)} <= 2k vertices"

    for arc in arcs:
        if arc is W:
            continue
        pred = rim[(arc.start_pos - 1) % n_r]
        succ = rim[(arc.start_pos + len(arc)) % n_r]
        if not path_is_good(ps, z, arc.vertices, pred, succ, n_r):
            raise NoValidA(f"arc at {arc.start_pos} inside A is not good")

    return SelectedPaths(A=A, U=U, W=W, arcs=arcs, u_in_a=(U is not W))


# ---------------------------------------------------------------------------
# pontoons
# ---------------------------------------------------------------------------

@dataclass
class PontoonEdits:
    """Edge surgery and face bookkeeping for one pontoon."""

    path: list[int]
    pred: int
    apex: int                    # successor of the path; fan source
    removed_spokes: list[tuple[int, int]]
    added_edges: list[tuple[int, int]]
    outer_faces: list[tuple[int, int, int]]   # join the outer dual section, in
                                              # order from the pred end to the apex end
    inner_face: tuple[int, int, int]          # stays on the inner cycle


def pontoon_edits(ps: PointSet, z: int, path: Sequence[int], pred: int, succ: int,
                  cycle_len: int) -> PontoonEdits:
    path = [int(v) for v in path]
    if not path_is_good(ps, z, path, pred, succ, cycle_len):
        raise BadPath(f"cannot build a pontoon over {path}: z inside the closure hull")
    s = succ
    removed = [(min(z, x), max(z, x)) for x in path]
    added = [(min(s, pred), max(s, pred))]
    added += [(min(s, x), max(s, x)) for x in path[:-1]]
    outer = [(s, pred, path[0])]
    outer += [(s, path[i], path[i + 1]) for i in range(len(path) - 1)]
    return PontoonEdits(path=path, pred=pred, apex=s, removed_spokes=removed,
                        added_edges=added, outer_faces=outer,
                        inner_face=(s, z, pred))


def build_pontoon(g: PlaneGraph, path: Sequence[int], z: int, ps: PointSet) -> PlaneGraph:
    """Retriangulate the convex region over a good path by a fan from its successor."""
    rim_cycle = g.outer_cycle()
    c = boundary_cycle(ps, rim_cycle)
    first, last = int(path[0]), int(path[-1])
    pred, succ = c.predecessor(first), c.successor(last)
    ed = pontoon_edits(ps, z, path, pred, succ, len(rim_cycle))
    removed = set(ed.removed_spokes)
    edges = [e for e in g.edge_tuples() if e not in removed]
    edges += ed.added_edges
    return make_plane_graph(ps, edges, validate=False)


# ---------------------------------------------------------------------------
# dual forest
# ---------------------------------------------------------------------------

def dual_forest(wd, inner_nodes: Sequence[int], site_of: dict[int, int] | None = None,
                site_rank: dict[int, int] | None = None) -> list[list[int]]:
    """Components of the weak dual minus the inner cycle, each ordered by the
    clockwise position of the boundary vertex that created its triangles."""
    inner = set(int(x) for x in inner_nodes)
    rest = [v for v in range(wd.node_count) if v not in inner]
    seen: set[int] = set()
    comps: list[list[int]] = []
    for v in rest:
        if v in seen:
            continue
        comp = []
        todo = [v]
        while todo:
            x = todo.pop()
            if x in seen or x in inner:
                continue
            seen.add(x)
            comp.append(x)
            todo.extend(b for b in wd.neighbors(x) if b not in inner)
        comps.append(comp)
    if site_of is not None and site_rank is not None:
        for comp in comps:
            comp.sort(key=lambda nd: site_rank[site_of[nd]])
        comps.sort(key=lambda cc: site_rank[site_of[cc[0]]])
    else:
        for comp in comps:
            comp.sort()
        comps.sort()
    return comps


@dataclass
class ConstructionTrace:
    """Record of the construction: central vertex, cycles, sites, chosen paths,
    case label, pontoon orders, and the dual forest."""

    k: int
    n: int
    j: int
    case_label: str                      # J0 | J1 | C1A | C1B | C2A | C2B
    z: int | None = None
    C: tuple[int, ...] | None = None
    S: tuple[int, ...] = ()
    B: tuple[int, ...] | None = None
    A: tuple[int, ...] | None = None
    U: tuple[int, ...] | None = None
    pontoon_orders: dict[str, int] = field(default_factory=dict)
    trees: tuple[tuple[int, ...], ...] = ()
    spiral_reversed: bool = False

    @property
    def m(self) -> int:
        return len(self.S)
