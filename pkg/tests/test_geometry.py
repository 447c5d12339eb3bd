import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipdense import new_geometric, new_graph, planarize_geometric
from bipdense.drawing import validate
from bipdense.errors import DegenerateIntersection
from bipdense.geometry import crossing_count_bruteforce, direction_cmp, orient

from helpers import random_geometric

coords = st.tuples(st.integers(-50, 50), st.integers(-50, 50)).map(lambda p: (Fraction(p[0]), Fraction(p[1])))


@given(coords, coords, coords)
def test_orient_is_antisymmetric(a, b, c):
    assert orient(a, b, c) == -orient(b, a, c) == orient(b, c, a)


@given(coords, coords)
def test_direction_order_is_antisymmetric(a, b):
    assert direction_cmp(a, b) == -direction_cmp(b, a)


def _x_drawing(p, q, r, s):
    """Edges 0-1 and 2-3 with the given endpoints."""
    return new_geometric(new_graph(4, "ABAB", [(0, 1), (2, 3)]), [p, q, r, s])


def test_exact_crossing_point():
    g = _x_drawing((0, 0), (3, 3), (0, 1), (1, 0))
    (pair, (pt, t, s)), = g.intersections.items()
    assert pair == (0, 1)
    assert pt == (Fraction(1, 2), Fraction(1, 2))
    assert (t, s) == (Fraction(1, 6), Fraction(1, 2))


def test_disjoint_segments_do_not_cross():
    assert _x_drawing((0, 0), (1, 0), (0, 1), (1, 1)).intersections == {}


@pytest.mark.parametrize(
    "pts",
    [
        [(0, 0), (2, 0), (1, 0), (1, 5)],  # endpoint touching the interior of the other edge
        [(0, 0), (4, 0), (1, 0), (3, 0)],  # collinear overlap
    ],
)
def test_degenerate_configurations_raise(pts):
    with pytest.raises(DegenerateIntersection):
        _x_drawing(*pts)


def test_vertex_on_edge_raises():
    with pytest.raises(DegenerateIntersection):
        new_geometric(new_graph(3, "ABA", [(0, 1)]), [(0, 0), (2, 2), (1, 1)])


def test_three_edges_through_one_point_raise():
    g = new_graph(6, "ABABAB", [(0, 1), (2, 3), (4, 5)])
    with pytest.raises(DegenerateIntersection):
        new_geometric(g, [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)])


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_planarization_is_valid_and_counts_crossings(rnd):
    g = random_geometric(random.Random(rnd.random()))
    d = planarize_geometric(g)
    validate(d)
    assert d.crossing_count == len(g.intersections) == crossing_count_bruteforce(g)
    assert [len(cs) for cs in d.edge_crossings] == [
        sum(1 for pair in g.intersections if e in pair) for e in range(g.m)
    ]
