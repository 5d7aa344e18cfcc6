"""The mirrored spiral and nonzero balancing pontoons are valid whenever
case 2(a) applies, not only when the geometry forces them; exercise them
directly so the fallback paths stay honest."""
import pytest

from kangulate import partition as P
from kangulate.construct import (
    boundary_cycle,
    maximal_bad_path,
    run_additions,
    select_paths,
)
from kangulate.gen import staircase_ring_set
from kangulate.geom import radial_order
from kangulate.verify import verify_kangulation


def _case2a_context(seed, k=7, j=4, n=98):
    ps = staircase_ring_set(n, seed)
    z = P._lex_min_interior(ps)
    rim = radial_order(ps, z)
    cycle = boundary_cycle(ps, rim)
    B = maximal_bad_path(cycle, z, ps)
    rec = run_additions(ps, rim, z, B, j - 1)
    sel = select_paths(cycle, rec.S, B, ps, z, k)
    assert not all(rec.shares_rim_edge) and not sel.u_in_a
    pieces = P._a_pieces(sel.A, rec.S_set)
    return ps, P._Context(ps=ps, k=k, j=j, m=j - 1, z=z, rim=rim,
                          rim_pos={v: i for i, v in enumerate(rim)},
                          cycle=cycle, B=B, rec=rec, sel=sel,
                          case1=False, pieces=pieces)


def _feasible_orders(ctx, reverse):
    from kangulate.construct import path_is_good
    k = ctx.k
    U = ctx.sel.U.vertices
    pieces = list(reversed([P._Piece(p.kind, list(reversed(p.verts)))
                            for p in ctx.pieces])) if reverse else ctx.pieces
    trees, _ = P._tree_layout(pieces)
    forbidden = {p % (k - 2) for start, length in trees
                 for p in range(start + 1, start + length)}
    out = []
    for r in range(0, k - 2):
        if any((p + r) % (k - 2) == 0 for p in forbidden):
            continue
        if r > 0:
            if reverse:
                path, pred, succ = U[:r], ctx.rim_prev(U[0]), U[r]
            else:
                path, pred, succ = U[-r:], U[-r - 1], ctx.rim_next(U[-1])
            if not path_is_good(ctx.ps, ctx.z, path, pred, succ, ctx.n_r):
                continue
        out.append(r)
    return out


@pytest.mark.parametrize("reverse", [False, True])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_case2a_all_feasible_pontoon_orders_verify(seed, reverse):
    ps, ctx = _case2a_context(seed)
    U = ctx.sel.U.vertices
    orders = _feasible_orders(ctx, reverse)
    assert orders and any(r > 0 for r in orders)
    for r in orders:
        if reverse:
            r_p = ctx.partial_pontoon(U[:r], ctx.rim_prev(U[0]), U[r]) if r else None
        else:
            r_p = ctx.partial_pontoon(U[-r:], U[-r - 1], ctx.rim_next(U[-1])) if r else None
        pontoons = [ctx.make_pontoon(p.verts) for p in ctx.pieces if p.kind == "arc"]
        plan = P._Plan("C2A", reverse, pontoons, r_p, None, r, 0)
        graph, trace, _, _ = P._Materializer(ctx, plan).run()
        report = verify_kangulation(ps, graph, ctx.k)
        assert report.overall, (seed, reverse, r, [c.name for c in report.failures()])
