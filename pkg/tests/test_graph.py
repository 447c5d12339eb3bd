import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipdense import Part, is_bipartite_consistent, new_graph
from bipdense.errors import DuplicateEdgeInSimpleMode, IndexOutOfRange, NonBipartiteEdge, SelfLoop
from bipdense.graph import complete_bipartite


@st.composite
def bipartite_graphs(draw, max_side=6, multigraph=False):
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pairs = [(i, a + j) for i in range(a) for j in range(b)]
    if multigraph:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * len(pairs)))
    else:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return new_graph(a + b, ["A"] * a + ["B"] * b, edges, multigraph_allowed=multigraph)


def test_part_other():
    assert Part.A.other is Part.B
    assert Part.B.other is Part.A


def test_rejects_loops_and_bad_indices():
    with pytest.raises(SelfLoop):
        new_graph(2, "AB", [(0, 0)], bipartite=False)
    with pytest.raises(IndexOutOfRange):
        new_graph(2, "AB", [(0, 2)])
    with pytest.raises(IndexOutOfRange):
        new_graph(3, "AB", [])


def test_rejects_same_part_edge_only_when_bipartite():
    with pytest.raises(NonBipartiteEdge):
        new_graph(2, "AA", [(0, 1)])
    g = new_graph(2, "AA", [(0, 1)], bipartite=False)
    assert not is_bipartite_consistent(g)


def test_duplicates_need_multigraph_mode():
    with pytest.raises(DuplicateEdgeInSimpleMode):
        new_graph(2, "AB", [(0, 1), (1, 0)])
    g = new_graph(2, "AB", [(0, 1), (1, 0), (0, 1)], multigraph_allowed=True)
    assert g.has_parallel_edges()
    assert g.parallel_classes() == [[0, 1, 2]]


def test_complete_bipartite():
    g = complete_bipartite(3, 4)
    assert (g.n, g.m) == (7, 12)
    assert [g.degree(x) for x in range(7)] == [4, 4, 4, 3, 3, 3, 3]
    assert is_bipartite_consistent(g)


@given(bipartite_graphs(multigraph=True))
def test_handshake(g):
    assert sum(g.degree(x) for x in range(g.n)) == 2 * g.m
    assert sum(len(g.incident(x)) for x in range(g.n)) == 2 * g.m


@given(bipartite_graphs())
def test_adjacency_matches_shared_endpoints(g):
    for e in range(g.m):
        u, v = g.endpoints(e)
        assert g.other_end(e, u) == v and g.other_end(e, v) == u
        for f in range(g.m):
            assert g.adjacent(e, f) == bool({u, v} & set(g.endpoints(f)))
    assert not g.has_parallel_edges()
