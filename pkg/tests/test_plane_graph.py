import numpy as np
import pytest
from hypothesis import given, settings

from kangulate.construct import wheel_triangulation
from kangulate.gen import random_point_set
from kangulate.geom import make_point_set
from kangulate.plane_graph import (
    BlockPartition,
    BlockPartitionError,
    CrossingEdges,
    NotTwoConnected,
    corresponding_subgraph,
    internal_faces,
    is_two_connected,
    make_plane_graph,
    validate_drawing,
    weak_dual,
)
from conftest import general_position_sets

SQUARE = [(0, 0), (10, 0), (10, 10), (0, 10)]
WHEEL_EDGES = [(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (1, 2), (2, 3), (3, 0)]


def _cyclic_eq(a, b):
    if len(a) != len(b) or set(a) != set(b):
        return False
    i = b.index(a[0])
    return b[i:] + b[:i] == list(a)


def test_square_cycle_faces():
    ps = make_point_set(SQUARE)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.face_count == 2
    faces = internal_faces(g)
    assert len(faces) == 1
    assert _cyclic_eq(faces[0], [0, 3, 2, 1])   # clockwise
    assert _cyclic_eq(g.outer_cycle(), [0, 3, 2, 1])


def test_crossing_diagonals_rejected():
    ps = make_point_set(SQUARE)
    with pytest.raises(CrossingEdges):
        make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def test_wheel_faces(square_center):
    g = make_plane_graph(square_center, WHEEL_EDGES)
    faces = internal_faces(g)
    assert len(faces) == 4
    assert all(len(f) == 3 for f in faces)
    assert len(g.outer_cycle()) == 4


def test_wheel_face_count_matches_euler():
    ps = random_point_set(17, seed=3)
    if not ps.interior:
        pytest.skip("no interior point drawn")
    g = wheel_triangulation(ps, min(ps.interior))
    assert len(internal_faces(g)) == ps.n - 1
    assert validate_drawing(g)


def test_pentagon_fan_triangulation():
    pts = [(0, 0), (10, -2), (16, 6), (8, 14), (-2, 8)]
    ps = make_point_set(pts)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
    assert len(internal_faces(g)) == 3


def test_weak_dual_of_wheel_is_cycle(square_center):
    g = make_plane_graph(square_center, WHEEL_EDGES)
    wd = weak_dual(g)
    assert wd.node_count == 4
    assert len(wd.edge_list) == 4
    assert all(len(wd.neighbors(v)) == 2 for v in range(4))


def test_weak_dual_of_fan_is_path():
    pts = [(0, 0), (10, -2), (16, 6), (8, 14), (-2, 8)]
    ps = make_point_set(pts)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (0, 3)])
    wd = weak_dual(g)
    degs = sorted(len(wd.neighbors(v)) for v in range(wd.node_count))
    assert degs == [1, 1, 2]


def test_weak_dual_single_face():
    ps = make_point_set(SQUARE)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 0)])
    wd = weak_dual(g)
    assert wd.node_count == 1
    assert wd.edge_list == []


def test_weak_dual_requires_two_connected():
    pts = [(0, 0), (4, 1), (2, 3), (8, 0), (6, 3)]
    ps = make_point_set(pts)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 1)])
    with pytest.raises(NotTwoConnected):
        weak_dual(g)


def test_weak_dual_of_triangulation_degree_bound():
    for seed in range(5):
        ps = random_point_set(12, seed=seed)
        if not ps.interior:
            continue
        g = wheel_triangulation(ps, min(ps.interior))
        wd = weak_dual(g)
        assert all(len(wd.neighbors(v)) <= 3 for v in range(wd.node_count))
        seen = set()
        for a, b, _ in wd.edge_list:
            assert (a, b) not in seen, "parallel dual edges in a triangulation"
            seen.add((a, b))


def test_corresponding_subgraph_wheel_theta(square_center):
    g = make_plane_graph(square_center, WHEEL_EDGES)
    wd = weak_dual(g)
    spoke_13 = []
    spoke_02 = []
    for node, fid in enumerate(wd.nodes):
        cyc = set(g.face_cycle(fid))
        (spoke_13 if 1 in cyc or 3 in cyc else spoke_02).append(node)
    # pair the triangles across spokes 4-3 and 4-1: two blocks of two
    t03 = next(v for v, f in enumerate(wd.nodes) if set(g.face_cycle(f)) == {4, 0, 3})
    t32 = next(v for v, f in enumerate(wd.nodes) if set(g.face_cycle(f)) == {4, 3, 2})
    t21 = next(v for v, f in enumerate(wd.nodes) if set(g.face_cycle(f)) == {4, 2, 1})
    t10 = next(v for v, f in enumerate(wd.nodes) if set(g.face_cycle(f)) == {4, 1, 0})
    bp = BlockPartition(dual=wd, blocks=(frozenset({t03, t32}), frozenset({t21, t10})),
                        block_size=2)
    sub = corresponding_subgraph(g, bp)
    assert sorted(sub.edge_tuples()) == [(0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (2, 4)]
    assert sorted(len(f) for f in internal_faces(sub)) == [4, 4]
    assert is_two_connected(sub)


def test_corresponding_subgraph_singleton_blocks(square_center):
    g = make_plane_graph(square_center, WHEEL_EDGES)
    wd = weak_dual(g)
    bp = BlockPartition(dual=wd, blocks=tuple(frozenset({v}) for v in range(4)),
                        block_size=1)
    sub = corresponding_subgraph(g, bp)
    assert sub.edge_tuples() == g.edge_tuples()


def test_block_partition_invariants(square_center):
    g = make_plane_graph(square_center, WHEEL_EDGES)
    wd = weak_dual(g)
    with pytest.raises(BlockPartitionError):
        BlockPartition(dual=wd, blocks=(frozenset({0, 1}),), block_size=2)
    with pytest.raises(BlockPartitionError):
        BlockPartition(dual=wd, blocks=(frozenset({0, 1, 2, 3}),), block_size=4)


def test_is_two_connected_cases():
    ps = make_point_set(SQUARE)
    cycle = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_two_connected(cycle)

    pts = [(0, 0), (4, 1), (2, 3), (8, 0), (6, 3)]
    bow = make_plane_graph(make_point_set(pts),
                           [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 1)])
    assert not is_two_connected(bow)

    theta = make_plane_graph(make_point_set(SQUARE + [(6, 5)]),
                             [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)])
    assert is_two_connected(theta)


def test_validate_drawing():
    ps = make_point_set(SQUARE)
    g = make_plane_graph(ps, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert validate_drawing(g)
    from kangulate.plane_graph import find_drawing_violation
    bad = np.array([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    assert find_drawing_violation(ps.xy, bad) is not None


@settings(max_examples=40, deadline=None)
@given(general_position_sets(min_size=5, max_size=10))
def test_euler_formula_on_wheels(ps):
    if not ps.interior:
        return
    g = wheel_triangulation(ps, min(ps.interior))
    v, e, f = g.vertex_count, g.edge_count, g.face_count
    assert v - e + f == 2
    assert int(g.face_sizes.sum()) == 2 * e
