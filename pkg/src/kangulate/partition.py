"""Block-partition planners for every construction case and the orchestrator.

Routing: j = 0 gets the fan polygon (path dual, blocks are runs of fan
triangles); j = 1 splits the wheel's dual cycle; j >= 2 adds m = j-1
triangles and dispatches on whether every added triangle touches the
original cycle (case 1 vs 2) and whether the longest free arc survives
outside the active path (case a vs b).  Pontoon orders are chosen from piece
lengths before any surgery; the triangulation is then materialized once and
partitioned, and the block structure is re-checked when the partition object
is built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .construct import (
    AdditionRecord,
    BadPath,
    BoundaryCycle,
    CannotAddTriangles,
    ConstructionError,
    ConstructionTrace,
    NoValidA,
    PontoonEdits,
    SelectedPaths,
    boundary_cycle,
    maximal_bad_path,
    path_is_good,
    pontoon_edits,
    run_additions,
    select_paths,
    wheel_edge_list,
)
from .geom import GeometryError, PointSet, angular_sort_cw, radial_order
from .plane_graph import (
    BlockPartition,
    BlockPartitionError,
    NotTwoConnected,
    PlaneGraph,
    corresponding_subgraph,
    make_plane_graph,
    weak_dual,
)
from .verify import verify_kangulation


class WrongResidue(GeometryError):
    pass


class TooFewBlocks(GeometryError):
    pass


class NoFeasibleR(ConstructionError):
    pass


class NoFeasibleL(ConstructionError):
    pass


def required_j(n: int, k: int) -> int:
    """The unique j in [0, k-3] with j = k - n (mod k-2)."""
    if k < 3:
        raise ValueError("k must be at least 3")
    return (k - n) % (k - 2)


# ---------------------------------------------------------------------------
# j = 0: fan polygon with a path dual
# ---------------------------------------------------------------------------

def fan_kangulation_j0(ps: PointSet, k: int) -> PlaneGraph:
    """Star-shaped fan polygon about the lowest point, fan-triangulated and
    merged into runs of k-2 triangles.  The polygon cycle is Hamiltonian, so
    the result is 2-connected."""
    n = ps.n
    if n < k:
        raise GeometryError(f"n = {n} < k = {k}: no k-gon face fits")
    if required_j(n, k) != 0:
        raise WrongResidue(f"required j is {required_j(n, k)}, not 0")
    xy = ps.xy
    p0 = int(np.lexsort((xy[:, 0], xy[:, 1]))[0])   # lowest, then leftmost
    others = np.concatenate([np.arange(p0), np.arange(p0 + 1, n)]).astype(np.int64)
    q = angular_sort_cw(xy, xy[p0], others)
    # polygon p0, q0, ..., q_{n-2}; fan triangle t = (p0, q_t, q_{t+1})
    poly_a = np.concatenate([[p0], q])
    poly_b = np.concatenate([q, [p0]])
    # spoke p0-q_t separates triangles t-1, t; keep it only on block boundaries
    t_idx = np.arange(1, n - 2, dtype=np.int64)
    kept = q[t_idx[t_idx % (k - 2) == 0]]
    edges = np.concatenate([
        np.stack([poly_a, poly_b], axis=1),
        np.stack([np.full(kept.shape, p0, dtype=np.int64), kept], axis=1),
    ])
    return make_plane_graph(ps, edges, validate=False)


# ---------------------------------------------------------------------------
# j = 1: split the wheel's dual cycle
# ---------------------------------------------------------------------------

def wheel_partition_j1(g: PlaneGraph, k: int) -> PlaneGraph:
    """Cut the wheel's dual cycle into consecutive runs of k-2 triangles,
    keeping one spoke per boundary; a subdivided wheel remains."""
    ps = g.point_set
    n = ps.n
    if required_j(n, k) != 1:
        raise WrongResidue(f"required j is {required_j(n, k)}, not 1")
    outer = g.outer_cycle()
    rim_set = set(outer)
    hub = [v for v in range(n) if v not in rim_set]
    if len(hub) != 1:
        raise GeometryError("not a wheel: expected exactly one internal vertex")
    z = hub[0]
    if (n - 1) % (k - 2) != 0:
        raise WrongResidue("wheel size is not a multiple of k-2")
    c = (n - 1) // (k - 2)
    if c < 2:
        raise TooFewBlocks(f"only {c} block(s); need at least 2 spokes")
    # canonical start: the face after the lexicographically smallest rim vertex
    start = min(range(len(outer)), key=lambda i: ps.point(outer[i]))
    rim = outer[start:] + outer[:start]
    keep = {(min(z, rim[i]), max(z, rim[i])) for i in range(n - 1) if i % (k - 2) == 0}
    edges = [e for e in g.edge_tuples()
             if not ((e[0] == z or e[1] == z) and e not in keep)]
    return make_plane_graph(ps, edges, validate=False)


# ---------------------------------------------------------------------------
# j >= 2: plan contexts
# ---------------------------------------------------------------------------

@dataclass
class _Piece:
    kind: str                  # "run" (sites) or "arc" (pontoon target)
    verts: list[int]

    def __len__(self) -> int:
        return len(self.verts)


def _a_pieces(A: Sequence[int], sites: frozenset[int]) -> list[_Piece]:
    pieces: list[_Piece] = []
    for v in A:
        kind = "run" if v in sites else "arc"
        if pieces and pieces[-1].kind == kind:
            pieces[-1].verts.append(v)
        else:
            pieces.append(_Piece(kind, [v]))
    return pieces


@dataclass
class _Context:
    ps: PointSet
    k: int
    j: int
    m: int
    z: int
    rim: list[int]
    rim_pos: dict[int, int]
    cycle: BoundaryCycle
    B: list[int] | None
    rec: AdditionRecord
    sel: SelectedPaths
    case1: bool
    pieces: list[_Piece]

    @property
    def n_r(self) -> int:
        return len(self.rim)

    def rim_next(self, v: int) -> int:
        return self.rim[(self.rim_pos[v] + 1) % self.n_r]

    def rim_prev(self, v: int) -> int:
        return self.rim[(self.rim_pos[v] - 1) % self.n_r]

    @property
    def a_first(self) -> int:
        return self.sel.A[0]

    @property
    def a_last(self) -> int:
        return self.sel.A[-1]

    def arc_closure(self, verts: Sequence[int]) -> tuple[int, int]:
        return self.rim_prev(verts[0]), self.rim_next(verts[-1])

    def make_pontoon(self, verts: Sequence[int]) -> PontoonEdits:
        pred, succ = self.arc_closure(verts)
        return pontoon_edits(self.ps, self.z, verts, pred, succ, self.n_r)

    def partial_pontoon(self, verts: Sequence[int], pred: int, succ: int) -> PontoonEdits:
        return pontoon_edits(self.ps, self.z, verts, pred, succ, self.n_r)


@dataclass
class _Plan:
    label: str
    reversed_spiral: bool
    pontoons: list[PontoonEdits]          # full pontoons over arcs of the active path
    r_pontoon: PontoonEdits | None
    l_pontoon: PontoonEdits | None
    r_order: int
    l_order: int


def _tree_layout(pieces: list[_Piece]):
    """Base offsets (with no leading pontoon) of every run, plus total length."""
    trees = []
    off = 0
    for piece in pieces:
        if piece.kind == "run":
            trees.append((off, len(piece)))
        off += len(piece)
    return trees, off


def _choose_r_case_a(ctx: _Context, reverse: bool) -> int | None:
    """Smallest pontoon order at the extreme of the free arc such that no
    block starts strictly inside a tree, among geometrically buildable orders."""
    k = ctx.k
    U = ctx.sel.U.vertices
    pieces = list(reversed([_Piece(p.kind, list(reversed(p.verts))) for p in ctx.pieces])) \
        if reverse else ctx.pieces
    trees, _total = _tree_layout(pieces)
    forbidden = set()
    for start, length in trees:
        for p in range(start + 1, start + length):
            forbidden.add(p % (k - 2))
    for r in range(0, k - 2):
        if any((p + r) % (k - 2) == 0 for p in forbidden):
            continue
        if r > 0:
            if r > len(U) // 2:
                continue
            if reverse:
                path, pred, succ = U[:r], ctx.rim_prev(U[0]), U[r]
            else:
                path, pred, succ = U[-r:], U[-r - 1], ctx.rim_next(U[-1])
            if not path_is_good(ctx.ps, ctx.z, path, pred, succ, ctx.n_r):
                continue
        return r
    return None


def _plan_case_a(ctx: _Context) -> _Plan:
    label = "C1A" if ctx.case1 else "C2A"
    pontoons = [ctx.make_pontoon(p.verts) for p in ctx.pieces if p.kind == "arc"]
    if ctx.case1:
        return _Plan(label, False, pontoons, None, None, 0, 0)
    r = _choose_r_case_a(ctx, reverse=False)
    reverse = False
    if r is None:
        r = _choose_r_case_a(ctx, reverse=True)
        reverse = True
    if r is None:
        raise NoFeasibleR("no pontoon order avoids starting a block inside a tree")
    U = ctx.sel.U.vertices
    r_p = None
    if r > 0:
        if reverse:
            r_p = ctx.partial_pontoon(U[:r], ctx.rim_prev(U[0]), U[r])
        else:
            r_p = ctx.partial_pontoon(U[-r:], U[-r - 1], ctx.rim_next(U[-1]))
    return _Plan(label, reverse, pontoons, r_p, None, r, 0)


def _split_pieces_around_u(ctx: _Context):
    u_verts = ctx.sel.U.vertices
    for i, piece in enumerate(ctx.pieces):
        if piece.kind == "arc" and piece.verts == u_verts:
            return ctx.pieces[:i], ctx.pieces[i + 1:]
    raise ConstructionError("longest free arc not found inside the active path")


def _plan_case_b(ctx: _Context) -> _Plan:
    k = ctx.k
    U = ctx.sel.U.vertices
    before, after = _split_pieces_around_u(ctx)
    pontoons = [ctx.make_pontoon(p.verts) for p in before + after if p.kind == "arc"]
    trees_after, len_after = _tree_layout(after)
    trees_before, len_before = _tree_layout(before)
    z_leg = len(ctx.sel.W) + 1

    if ctx.case1:
        # choose r so the first section is a multiple of k-2
        base = len_after + z_leg + len_before
        r = (-base) % (k - 2)
        if r > len(U) // 2:
            raise NoFeasibleR("free arc too short for the balancing pontoon")
        l = 0
    else:
        # no block may end strictly inside a tree, in either outer section
        forbidden = set()
        for start, length in trees_after:
            for p in range(start, start + length - 1):
                forbidden.add(p % (k - 2))
        off2 = len_after + z_leg
        for start, length in trees_before:
            for p in range(off2 + start, off2 + start + length - 1):
                forbidden.add(p % (k - 2))
        r = None
        for cand in range(0, k - 2):
            if all((p + cand) % (k - 2) != (k - 3) for p in forbidden):
                r = cand
                break
        if r is None:
            raise NoFeasibleR("no pontoon order avoids ending a block inside a tree")
        base = (r + len_after) + z_leg + len_before
        l = (-base) % (k - 2)
        if r + l > len(U) - 2:
            raise NoFeasibleL("free arc too short for both balancing pontoons")

    inner_count = ctx.n_r - sum(len(p.path) for p in pontoons) - r - l
    if inner_count < k:
        raise NoFeasibleR(f"only {inner_count} inner-cycle faces would remain")
    r_p = ctx.partial_pontoon(U[-r:], U[-r - 1], ctx.rim_next(U[-1])) if r > 0 else None
    l_p = ctx.partial_pontoon(U[:l], ctx.rim_prev(U[0]), U[l]) if l > 0 else None
    label = "C1B" if ctx.case1 else "C2B"
    return _Plan(label, False, pontoons, r_p, l_p, r, l)


# ---------------------------------------------------------------------------
# materialization
# ---------------------------------------------------------------------------

def _face_key(verts) -> frozenset[int]:
    return frozenset(int(v) for v in verts)


class _Materializer:
    def __init__(self, ctx: _Context, plan: _Plan):
        self.ctx = ctx
        self.plan = plan
        self.k = ctx.k

    def run(self):
        ctx, plan = self.ctx, self.plan
        ps, z = ctx.ps, ctx.z
        all_pontoons = list(plan.pontoons)
        if plan.r_pontoon:
            all_pontoons.append(plan.r_pontoon)
        if plan.l_pontoon:
            all_pontoons.append(plan.l_pontoon)

        removed = set()
        added: list[tuple[int, int]] = []
        for p in all_pontoons:
            removed.update(p.removed_spokes)
            added.extend(p.added_edges)
        edges = [e for e in
                 ((min(a, b), max(a, b)) for a, b in wheel_edge_list(ps, ctx.rim, z))
                 if e not in removed]
        edges += [tuple(ch) for ch in ctx.rec.chords]
        edges += added
        tri_graph = make_plane_graph(ps, edges, validate=False)

        expected_faces = ctx.n_r + ctx.m
        internal = tri_graph.internal_face_ids()
        if len(internal) != expected_faces:
            raise ConstructionError(
                f"triangulation has {len(internal)} internal faces, expected {expected_faces}")
        registry: dict[frozenset[int], int] = {}
        for f in internal:
            cyc = tri_graph.face_cycle(f)
            if len(cyc) != 3:
                raise ConstructionError("non-triangular face in the full triangulation")
            registry[_face_key(cyc)] = f

        wd = weak_dual(tri_graph)
        self.wd = wd
        self.node_of = {key: wd.node_of_face[f] for key, f in registry.items()}

        zp_nodes = self._inner_cycle_nodes(tri_graph, z)
        wd.inner_cycle = zp_nodes
        self.zp_nodes = zp_nodes
        self.zp_index = {nd: i for i, nd in enumerate(zp_nodes)}
        self.j_nodes = [v for v in range(wd.node_count) if v not in self.zp_index]
        self.adj_j = {v: [b for b in wd.neighbors(v) if b not in self.zp_index]
                      for v in self.j_nodes}

        site_tri = {s: ctx.rec.triangles[t] for t, s in enumerate(ctx.rec.S)}
        self.tri_node = {s: self.node_of[_face_key(tr)] for s, tr in site_tri.items()}

        if ctx.case1:
            sections = self._sections_case1()
        else:
            sections = self._sections_case2()

        h_nodes = [nd for sec in sections for nd in sec]
        if sorted(h_nodes) != list(range(wd.node_count)):
            raise ConstructionError("spiral sections do not cover the weak dual exactly")
        blocks: list[frozenset[int]] = []
        for sec in sections:
            if len(sec) % (self.k - 2) != 0:
                raise ConstructionError("section length is not a multiple of k-2")
            for i in range(0, len(sec), self.k - 2):
                blocks.append(frozenset(sec[i:i + self.k - 2]))
        try:
            bp = BlockPartition(dual=wd, blocks=tuple(blocks), block_size=self.k - 2)
        except BlockPartitionError as exc:
            raise ConstructionError(f"block partition invalid: {exc}") from exc
        result = corresponding_subgraph(tri_graph, bp)

        trace = ConstructionTrace(
            k=ctx.k, n=ps.n, j=ctx.j, case_label=self.plan.label,
            z=z, C=tuple(ctx.rim), S=tuple(ctx.rec.S),
            B=tuple(ctx.B) if ctx.B else None,
            A=tuple(ctx.sel.A), U=tuple(ctx.sel.U.vertices),
            pontoon_orders=self._pontoon_orders(),
            trees=tuple(tuple(p.verts) for p in ctx.pieces if p.kind == "run"),
            spiral_reversed=self.plan.reversed_spiral,
        )
        return result, trace, tri_graph, bp

    # -- helpers ------------------------------------------------------------

    def _pontoon_orders(self) -> dict[str, int]:
        orders = {}
        for p in self.plan.pontoons:
            orders[f"a:{p.apex}"] = len(p.path)
        if self.plan.label in ("C1B", "C2A", "C2B"):
            orders["R"] = self.plan.r_order
        if self.plan.label == "C2B":
            orders["L"] = self.plan.l_order
        return orders

    def _inner_cycle_nodes(self, g: PlaneGraph, z: int) -> list[int]:
        hes = g.rotation_at(z)
        nbrs = [int(g.target[h]) for h in hes]
        nodes = []
        for i in range(len(nbrs)):
            key = _face_key((z, nbrs[i], nbrs[(i + 1) % len(nbrs)]))
            nd = self.node_of.get(key)
            if nd is None:
                raise ConstructionError("missing face between consecutive spokes")
            nodes.append(nd)
        return nodes

    def _wheel_node(self, a: int, b: int) -> int | None:
        return self.node_of.get(_face_key((self.ctx.z, a, b)))

    def _pontoon_nodes(self, p: PontoonEdits) -> list[int]:
        return [self.node_of[_face_key(tr)] for tr in p.outer_faces]

    def _zp_arc(self, start_node: int, count: int, forward: bool) -> list[int]:
        i0 = self.zp_index[start_node]
        step = 1 if forward else -1
        return [self.zp_nodes[(i0 + step * t) % len(self.zp_nodes)] for t in range(count)]

    # -- case 1: outer sections are dual paths --------------------------------

    def _component_of(self, seed: int) -> list[int]:
        seen = {seed}
        todo = [seed]
        while todo:
            x = todo.pop()
            for b in self.adj_j[x]:
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        return sorted(seen)

    def _order_path(self, comp: list[int], prefer_exit: list[int]):
        """Walk the dual path ``comp`` so it ends at a node with an inner-cycle
        neighbor, preferring the given exits; returns (order, exit, zeta)."""
        comp_set = set(comp)
        deg = {v: sum(1 for b in self.adj_j[v] if b in comp_set) for v in comp}
        if any(d > 2 for d in deg.values()):
            raise ConstructionError("outer dual section is not a path")
        endpoints = [v for v in comp if deg[v] <= 1]
        if len(comp) == 1:
            endpoints = comp
        candidates = [e for e in prefer_exit if e in endpoints]
        candidates += [e for e in sorted(endpoints) if e not in candidates]
        for exit_node in candidates:
            zeta = self._zeta_for(exit_node)
            if zeta is None:
                continue
            if len(comp) == 1:
                return comp, exit_node, zeta
            start = [e for e in endpoints if e != exit_node]
            if not start:
                continue
            order = self._walk(start[0], comp_set)
            if order[-1] != exit_node:
                continue
            return order, exit_node, zeta
        raise ConstructionError("no path traversal reaches an inner-cycle neighbor")

    def _walk(self, start: int, comp_set: set[int]) -> list[int]:
        order = [start]
        prev = None
        cur = start
        while True:
            nxts = [b for b in self.adj_j[cur] if b in comp_set and b != prev]
            if not nxts:
                break
            if len(nxts) > 1:
                raise ConstructionError("outer dual section branches")
            prev, cur = cur, nxts[0]
            order.append(cur)
        if len(order) != len(comp_set):
            raise ConstructionError("outer dual section walk incomplete")
        return order

    def _zeta_for(self, exit_node: int, forward: bool = True) -> int | None:
        """Inner-cycle neighbor to descend to from an exit node, preferring the
        wheel face just clockwise of the exit triangle's site."""
        ctx = self.ctx
        prefs: list[int] = []
        for s, nd in self.tri_node.items():
            if nd == exit_node:
                cand = self._wheel_node(s, ctx.rim_next(s)) if forward \
                    else self._wheel_node(ctx.rim_prev(s), s)
                if cand is not None:
                    prefs.append(cand)
        nbrs = [b for b in self.wd.neighbors(exit_node) if b in self.zp_index]
        for p in prefs:
            if p in nbrs:
                return p
        return min(nbrs) if nbrs else None

    def _sections_case1(self) -> list[list[int]]:
        ctx = self.ctx
        if not ctx.sel.u_in_a:
            comp = self._component_of(self.tri_node[ctx.a_first])
            if sorted(comp) != sorted(self.j_nodes):
                raise ConstructionError("outer dual section is disconnected")
            order, exit_node, zeta = self._order_path(
                comp, [self.tri_node[ctx.a_last], self.tri_node[ctx.a_first]])
            return [order + self._zp_arc(zeta, len(self.zp_nodes), True)]

        # two outer paths: J1 ends clockwise (descent), J2 is entered after the leg
        s_u = ctx.rim_next(ctx.sel.U.vertices[-1])
        comp1 = self._component_of(self.tri_node[s_u])
        comp2 = self._component_of(self.tri_node[ctx.a_first])
        if set(comp1) & set(comp2) or len(comp1) + len(comp2) != len(self.j_nodes):
            raise ConstructionError("outer dual sections do not split in two")
        order1, exit1, zeta1 = self._order_path(comp1, [self.tri_node[ctx.a_last]])
        entry2 = self.tri_node[ctx.a_first]
        order2 = self._order_toward(comp2, entry2)
        return self._two_sections(order1, zeta1, order2, entry2)

    def _order_toward(self, comp: list[int], entry: int) -> list[int]:
        comp_set = set(comp)
        if len(comp) == 1:
            return comp
        deg = {v: sum(1 for b in self.adj_j[v] if b in comp_set) for v in comp}
        if deg.get(entry, 0) > 1:
            raise ConstructionError("entry node is not an endpoint of its section")
        return self._walk(entry, comp_set)

    def _two_sections(self, order1, zeta1, order2, entry2) -> list[list[int]]:
        """First section: J1, clockwise leg on the inner cycle, J2; second
        section: the remaining inner-cycle arc."""
        zp = self.zp_nodes
        i0 = self.zp_index[zeta1]
        leg = []
        pass_at = None
        for t in range(len(zp)):
            nd = zp[(i0 + t) % len(zp)]
            leg.append(nd)
            if entry2 in self.wd.neighbors(nd):
                pass_at = t
                break
        if pass_at is None:
            raise ConstructionError("cannot pass from the inner cycle to the second section")
        expected_leg = len(self.ctx.sel.W) + 1
        if len(leg) != expected_leg:
            raise ConstructionError(
                f"inner leg has {len(leg)} nodes, expected {expected_leg}")
        rest = [zp[(i0 + pass_at + 1 + t) % len(zp)] for t in range(len(zp) - len(leg))]
        if not rest:
            raise ConstructionError("second section of the inner cycle is empty")
        return [order1 + leg + order2, rest]

    # -- case 2: concatenated clockwise orders --------------------------------

    def _sections_case2(self) -> list[list[int]]:
        ctx, plan = self.ctx, self.plan
        rev = plan.reversed_spiral
        pontoon_by_arc = {tuple(p.path): p for p in plan.pontoons}

        def piece_faces(pieces) -> list[int]:
            out: list[int] = []
            for piece in pieces:
                if piece.kind == "run":
                    sites = list(reversed(piece.verts)) if rev else piece.verts
                    out.extend(self.tri_node[s] for s in sites)
                else:
                    p = pontoon_by_arc[tuple(piece.verts)]
                    nodes = self._pontoon_nodes(p)
                    out.extend(reversed(nodes) if rev else nodes)
            return out

        if not ctx.sel.u_in_a:
            sigma: list[int] = []
            if plan.r_pontoon:
                nodes = self._pontoon_nodes(plan.r_pontoon)
                sigma.extend(reversed(nodes) if rev else nodes)
            pieces = list(reversed(ctx.pieces)) if rev else ctx.pieces
            sigma.extend(piece_faces(pieces))
            if sorted(sigma) != sorted(self.j_nodes):
                raise ConstructionError("clockwise order misses outer dual nodes")
            exit_node = sigma[-1]
            zeta = self._zeta_for(exit_node, forward=not rev)
            if zeta is None or zeta not in self.wd.neighbors(exit_node):
                raise ConstructionError("no descent available at the spiral's end")
            return [sigma + self._zp_arc(zeta, len(self.zp_nodes), forward=not rev)]

        before, after = _split_pieces_around_u(ctx)
        sigma1: list[int] = []
        if plan.r_pontoon:
            sigma1.extend(self._pontoon_nodes(plan.r_pontoon))
        sigma1.extend(piece_faces(after))
        sigma2 = piece_faces(before)
        if plan.l_pontoon:
            sigma2.extend(self._pontoon_nodes(plan.l_pontoon))
        if sorted(sigma1 + sigma2) != sorted(self.j_nodes):
            raise ConstructionError("clockwise sections miss outer dual nodes")
        exit_node = sigma1[-1]
        zeta = self._zeta_for(exit_node)
        if zeta is None or zeta not in self.wd.neighbors(exit_node):
            raise ConstructionError("no descent available at the first section's end")
        return self._two_sections(sigma1, zeta, sigma2, sigma2[0])


# ---------------------------------------------------------------------------
# orchestration
# ---------------------------------------------------------------------------

@dataclass
class KangulationResult:
    status: str                 # "ok" | "infeasible" | "honest-failure"
    k: int
    n: int
    j: int
    interior_count: int
    graph: PlaneGraph | None = None
    trace: ConstructionTrace | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _lex_min_interior(ps: PointSet) -> int:
    idx = np.flatnonzero(ps.interior_mask)
    sub = ps.xy[idx]
    return int(idx[np.lexsort((sub[:, 1], sub[:, 0]))[0]])


def construct_j2plus(ps: PointSet, k: int, j: int):
    """Wheel, triangle additions, pontoons and the case partition, for j >= 2."""
    z = _lex_min_interior(ps)
    rim = radial_order(ps, z)
    cycle = boundary_cycle(ps, rim)
    B = maximal_bad_path(cycle, z, ps)
    rec = run_additions(ps, rim, z, B, j - 1)
    sel = select_paths(cycle, rec.S, B, ps, z, k)
    case1 = all(rec.shares_rim_edge)
    pieces = _a_pieces(sel.A, rec.S_set)
    ctx = _Context(ps=ps, k=k, j=j, m=j - 1, z=z, rim=rim,
                   rim_pos={v: i for i, v in enumerate(rim)},
                   cycle=cycle, B=B, rec=rec, sel=sel, case1=case1, pieces=pieces)
    plan = _plan_case_a(ctx) if not sel.u_in_a else _plan_case_b(ctx)
    graph, trace, tri_graph, bp = _Materializer(ctx, plan).run()
    return graph, trace, tri_graph, bp


def kangulate(ps: PointSet, k: int) -> KangulationResult:
    """Decide and construct: infeasible when interior points are lacking,
    guaranteed construction for n >= 2k^2, best-effort below."""
    if k < 3:
        raise ValueError("k must be at least 3")
    n = ps.n
    interior = ps.interior_count
    if n < k:
        return KangulationResult("infeasible", k, n, required_j(n, k), interior,
                                 detail=f"n = {n} < k = {k}")
    j = required_j(n, k)
    if interior < j:
        return KangulationResult("infeasible", k, n, j, interior,
                                 detail=f"needs {j} interior points, has {interior}")

    guaranteed = n >= 2 * k * k
    try:
        if j == 0:
            graph = fan_kangulation_j0(ps, k)
            trace = ConstructionTrace(k=k, n=n, j=0, case_label="J0")
        elif j == 1:
            z = _lex_min_interior(ps)
            rim = radial_order(ps, z)
            wheel = make_plane_graph(ps, wheel_edge_list(ps, rim, z), validate=False)
            graph = wheel_partition_j1(wheel, k)
            trace = ConstructionTrace(k=k, n=n, j=1, case_label="J1",
                                      z=z, C=tuple(rim))
        else:
            graph, trace, _, _ = construct_j2plus(ps, k, j)
    except (ConstructionError, BlockPartitionError, NotTwoConnected, BadPath,
            NoValidA, CannotAddTriangles) as exc:
        if guaranteed:
            raise
        return KangulationResult("honest-failure", k, n, j, interior,
                                 detail=f"construction failed below guaranteed range: {exc}")
    except AssertionError as exc:
        if guaranteed:
            raise
        return KangulationResult("honest-failure", k, n, j, interior,
                                 detail=f"internal invariant failed below guaranteed range: {exc}")

    if not guaranteed:
        report = verify_kangulation(ps, graph, k)
        if not report.overall:
            fails = ", ".join(c.name for c in report.failures())
            return KangulationResult("honest-failure", k, n, j, interior,
                                     detail=f"verification failed below guaranteed range: {fails}")
    return KangulationResult("ok", k, n, j, interior, graph=graph, trace=trace)
