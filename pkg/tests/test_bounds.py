from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bipdense import (
    BoundsReport,
    cr_lower_bound,
    gen_2planar,
    gen_fan,
    gen_ic,
    gen_rac,
    kplanar_density_bound,
    max_edges,
    verify_drawing,
)
from bipdense.bounds import max_edges_info, small_n_cap
from bipdense.errors import BadSize, UnknownFamily

# (family, bipartite upper, bipartite lower) as (slope, offset)
TABLE = {
    "planar": ((2, -4), (2, -4)),
    "ic": ((Fraction(9, 4), -4), (Fraction(9, 4), -4)),
    "nic": ((Fraction(5, 2), -5), (Fraction(5, 2), -5)),
    "1-planar": ((3, -8), (3, -8)),
    "rac": ((3, -7), (3, -9)),
    "2-planar": ((Fraction(7, 2), -7), (Fraction(7, 2), -12)),
    "fan": ((4, -12), (4, -16)),
}


@pytest.mark.parametrize("family", sorted(TABLE))
@pytest.mark.parametrize("n", [5, 8, 20, 100, 1001])
def test_table(family, n):
    (ua, ub), (la, lb) = TABLE[family]
    assert max_edges(family, n) == ua * n + ub
    assert max_edges(family, n, kind="lower") == la * n + lb


def test_general_graph_bounds():
    assert max_edges("planar", 10, bipartite=False) == 24
    assert max_edges("1-planar", 10, bipartite=False) == 32
    assert max_edges("rac", 10, bipartite=False) == 30


def test_aliases_and_unknown_families():
    assert max_edges("IC-planar", 40) == max_edges("ic", 40)
    assert max_edges("2planar", 40) == max_edges("2-planar", 40)
    with pytest.raises(UnknownFamily):
        max_edges("torus", 10)
    with pytest.raises(ValueError):
        max_edges("ic", 10, kind="middle")


@pytest.mark.parametrize("n", range(0, 5))
def test_small_n_regime(n):
    value, regime = max_edges_info("2-planar", n)
    assert regime == "small-n"
    assert value == small_n_cap(n) <= n * (n - 1) // 2


def test_crossing_bound_spot_values():
    assert cr_lower_bound(20, 85) == 104  # linear 104 beats cubic 85
    assert cr_lower_bound(10, 10) == 0
    assert cr_lower_bound(10, 100) == Fraction(16 * 100**3, 289 * 100)
    with pytest.raises(BadSize):
        cr_lower_bound(2, 1)


@given(st.integers(3, 300), st.integers(0, 3000))
def test_crossing_bound_is_the_max_of_its_parts(n, m):
    linear = max(Fraction(0), 3 * m - Fraction(17, 2) * n + 19)
    cubic = Fraction(16 * m**3, 289 * n * n) if 4 * m >= 17 * n else Fraction(0)
    assert cr_lower_bound(n, m) == max(linear, cubic)


def test_kplanar_density():
    assert kplanar_density_bound(100, 8) == 850
    assert kplanar_density_bound(100, 1) == 292
    assert kplanar_density_bound(100, 2) == 343
    with pytest.raises(ValueError):
        kplanar_density_bound(10, 0)


@given(st.integers(1, 500), st.integers(3, 40))
def test_kplanar_envelope_is_tight(n, k):
    r = kplanar_density_bound(n, k)
    target = Fraction(17, 8) ** 2 * 2 * k * n * n
    if r.denominator == 1 and r * r != target:
        assert r * r >= target > (r - 1) ** 2
    else:
        assert r * r == target


def test_verify_drawing_report():
    rep = verify_drawing(gen_2planar(16), ["2-planar", "1-planar", "fan"])
    assert isinstance(rep, BoundsReport) and rep.ok()
    assert rep.crossing_ok and rep.crossings >= rep.crossing_floor
    assert rep.within_upper("2-planar") and not rep.within_upper("1-planar")
    by_family = {f["family"]: f for f in rep.as_dict()["families"]}
    assert by_family["2-planar"]["member"] and not by_family["1-planar"]["member"]
    assert by_family["2-planar"]["lower_bound_construction"] == "44"


def test_verify_drawing_rac_and_multigraphs():
    rep = verify_drawing(gen_rac(3), ["rac"])
    assert rep.entries[0].member.holds and rep.m == rep.entries[0].upper_bound - 2
    multi = verify_drawing(gen_fan("k2_multi", 8), ["fan"])
    assert not multi.simple and multi.crossing_floor is None
    assert verify_drawing(gen_ic(8), ["rac"]).entries[0].member.holds is False
