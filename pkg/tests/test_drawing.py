import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipdense import build_topological, gen_2planar, gen_cylinder, gen_fan, new_graph
from bipdense.builder import Builder
from bipdense.drawing import check_euler, check_homotopy, validate
from bipdense.errors import (
    AdjacentEdgesCross,
    EdgePairCrossesTwice,
    HomotopicMultiedge,
    RotationInconsistent,
    SelfCrossing,
)

from helpers import small_fixtures, topological


def _path_graph():
    # 0-1, 2-3 disjoint; 1-2 shares vertices with both
    return new_graph(4, "ABAB", [(0, 1), (2, 3), (1, 2)])


def test_adjacent_edges_may_not_cross():
    with pytest.raises(AdjacentEdgesCross):
        build_topological(_path_graph(), [[], ["x"], ["x"]], {})


def test_edge_pair_crosses_at_most_once():
    with pytest.raises(EdgePairCrossesTwice):
        build_topological(_path_graph(), [["x", "y"], ["x", "y"], []], {})


def test_edge_may_not_cross_itself():
    with pytest.raises(SelfCrossing):
        build_topological(_path_graph(), [["x", "x"], [], []], {})
    with pytest.raises(SelfCrossing):
        build_topological(_path_graph(), [["x"], [], []], {})


def test_crossing_on_three_edges_is_rejected():
    g = new_graph(6, "ABABAB", [(0, 1), (2, 3), (4, 5)])
    with pytest.raises(RotationInconsistent):
        build_topological(g, [["x"], ["x"], ["x"]], {})


def test_single_crossing_drawing():
    g = new_graph(4, "ABAB", [(0, 1), (2, 3)])
    # ends at the crossing alternate between the two edges
    rot = {0: [0], 1: [0], 2: [1], 3: [1], ("c", "x"): [(0, 1), (1, 1), (0, 0), (1, 0)]}
    d = build_topological(g, [["x"], ["x"]], rot)
    validate(d)
    assert d.crossing_count == 1
    assert d.segment_count == 4
    assert len(d.faces()) == 1  # a star: V - E + F = 5 - 4 + 1
    assert d.crossing_of(0, 1) == 0 and d.crossing_edges(0) == [1]


def test_rotation_must_alternate_at_crossing():
    g = new_graph(4, "ABAB", [(0, 1), (2, 3)])
    rot = {0: [0], 1: [0], 2: [1], 3: [1], ("c", "x"): [(0, 1), (0, 0), (1, 1), (1, 0)]}
    with pytest.raises(RotationInconsistent):
        build_topological(g, [["x"], ["x"]], rot)


def test_homotopic_parallel_edges_are_rejected():
    b = Builder(multigraph=True)
    u, v = b.add_vertex("A"), b.add_vertex("B")
    b.route(u, v)
    b.route(u, v)
    with pytest.raises(HomotopicMultiedge):
        b.to_drawing()


def test_parallel_edges_separated_by_vertices_are_accepted():
    d = gen_fan("k2_multi", 8)
    assert d.graph.has_parallel_edges()
    check_homotopy(d)


@pytest.mark.parametrize("name", sorted(small_fixtures()))
def test_fixtures_satisfy_euler_per_component(name):
    d = topological(small_fixtures()[name])
    check_euler(d)
    assert d.node_count - d.segment_count + len(d.faces()) == 1 + len(d.components)


def test_half_edge_structure_is_consistent():
    d = gen_2planar(16)
    for h in range(2 * d.segment_count):
        assert d.he_dest(h) == d.he_origin(h ^ 1)
        assert d.he_origin(d.he_next(h)) == d.he_dest(h)
    walks = d.faces()
    assert sorted(h for w in walks for h in w) == list(range(2 * d.segment_count))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12))
def test_cylinder_is_a_plane_quadrangulation(c):
    d = gen_cylinder(c)
    assert (d.n, d.m, d.crossing_count) == (4 * c, 8 * c - 4, 0)
    assert all(len(w) == 4 for w in d.faces())
