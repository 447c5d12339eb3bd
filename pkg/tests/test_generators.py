import pytest

from bipdense import (
    gen_2planar,
    gen_3planar,
    gen_8sticks_fixture,
    gen_cylinder,
    gen_fan,
    gen_ic,
    gen_nic,
    gen_rac,
    is_bipartite_consistent,
    is_fan_planar,
    is_ic_planar,
    is_k_planar,
    is_nic_planar,
    is_rac,
    planarize_geometric,
    write_drawing,
)
from bipdense.errors import BadCongruence, BadSize, TooFewColumns
from bipdense.generators import THREE_PLANAR_CONSTANT
from bipdense.generators.rac import rac_levels
from bipdense.geometry import orient

SWEEP = range(12, 201, 4)


@pytest.mark.parametrize("n", SWEEP)
def test_ic_sweep(n):
    d = gen_ic(n)
    assert 4 * d.m == 9 * n - 16
    assert is_ic_planar(d) and is_bipartite_consistent(d.graph)


@pytest.mark.parametrize("n", SWEEP)
def test_nic_sweep(n):
    d = gen_nic(n)
    assert 2 * d.m == 5 * n - 10
    assert is_nic_planar(d)


def test_nic_at_eight_falls_back_to_the_ic_drawing():
    d = gen_nic(8)
    assert d.m == 14 and is_nic_planar(d)
    assert "note" in d.metadata


@pytest.mark.parametrize("n", range(16, 201, 4))
def test_2planar_simple_sweep(n):
    d = gen_2planar(n)
    assert 2 * d.m == 7 * n - 24
    assert is_k_planar(d, 2) and not d.graph.has_parallel_edges()


@pytest.mark.parametrize("n", range(16, 201, 4))
def test_2planar_multigraph_sweep(n):
    d = gen_2planar(n, multigraph=True)
    # n/4 odd: no multigraph gadget for the outer end is known, two edges short
    want = 7 * n - 16 if (n // 4) % 2 == 0 else 7 * n - 20
    assert 2 * d.m == want
    assert is_k_planar(d, 2)


@pytest.mark.parametrize("c", range(4, 51, 3))
def test_3planar_sweep(c):
    d = gen_3planar(c)
    assert d.m == 4 * d.n - THREE_PLANAR_CONSTANT
    assert is_k_planar(d, 3)
    inner = [x for x in range(d.n) if 2 <= x // 4 < c - 2]
    assert all(d.graph.degree(x) == 8 for x in inner)


@pytest.mark.parametrize("k", range(1, 9))
def test_rac_levels(k):
    g = gen_rac(k)
    assert (g.n, g.m) == (6 * k, 18 * k - 9)
    assert is_rac(g) and is_bipartite_consistent(g.graph)


def test_rac_levels_are_nested_star_shaped_hexagons():
    levels, _ = rac_levels(6)
    for hexagon in levels:
        origin = (0, 0)
        # counterclockwise around the origin
        assert all(orient(origin, hexagon[i], hexagon[(i + 1) % 6]) > 0 for i in range(6))
    for inner, outer in zip(levels[1:-2], levels[2:-1]):
        assert outer == [(4 * x, 4 * y) for x, y in inner]


@pytest.mark.parametrize("n", range(8, 41))
def test_fan_k4(n):
    d = gen_fan("k4", n)
    assert d.m == 4 * n - 16 and is_fan_planar(d)


@pytest.mark.parametrize("variant,n", [("k2_multi", n) for n in range(6, 31)] + [("k4_multi", n) for n in range(8, 31)])
def test_fan_multigraphs(variant, n):
    d = gen_fan(variant, n)
    assert d.m == 4 * n - 12 and is_fan_planar(d)


def test_k55_minus_e():
    d = gen_fan("k55e", 10)
    assert d.m == 24 and is_fan_planar(d)
    assert gen_fan("k55e_multi", 10).m == 28


def test_8sticks_fixture_shape():
    d = gen_8sticks_fixture()
    assert (d.n, d.m) == (24, 56) and is_k_planar(d, 2)


@pytest.mark.parametrize(
    "make",
    [lambda: gen_ic(16), lambda: gen_nic(20), lambda: gen_2planar(24, True), lambda: gen_3planar(5),
     lambda: gen_fan("k2_multi", 9), lambda: gen_rac(3), gen_8sticks_fixture],
)
def test_generators_are_deterministic(make):
    assert write_drawing(make()) == write_drawing(make())


def test_rac_planarization_matches_geometry():
    g = gen_rac(3)
    assert planarize_geometric(g).crossing_count == len(g.intersections)


@pytest.mark.parametrize(
    "call,exc",
    [
        (lambda: gen_ic(18), BadCongruence),
        (lambda: gen_ic(4), BadSize),
        (lambda: gen_nic(10), BadCongruence),
        (lambda: gen_2planar(12), BadSize),
        (lambda: gen_2planar(30), BadCongruence),
        (lambda: gen_3planar(3), BadSize),
        (lambda: gen_rac(0), BadSize),
        (lambda: gen_fan("k4", 7), BadSize),
        (lambda: gen_fan("k55e", 12), BadSize),
        (lambda: gen_fan("k3", 10), ValueError),
    ],
)
def test_bad_sizes(call, exc):
    with pytest.raises(exc):
        call()


def test_cylinder_sizes():
    with pytest.raises(TooFewColumns):
        gen_cylinder(1)
