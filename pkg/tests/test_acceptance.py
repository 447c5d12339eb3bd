"""Acceptance criteria: one PASS/FAIL line per criterion with its runtime.

Run directly (``python tests/test_acceptance.py``) for the summary, or through
pytest, where each criterion is a test that prints its line.
"""
from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import brute_force_plane_size, random_geometric, random_subdrawing, small_fixtures, topological  # noqa: E402

from bipdense import (  # noqa: E402
    analyze,
    cr_lower_bound,
    eliminate_8_sticks,
    find_8_sticks,
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
    kplanar_density_bound,
    max_edges,
    parse_drawing,
    planar_structure,
    planarize_geometric,
    write_drawing,
)
from bipdense.analysis import brute_force_max_plane  # noqa: E402
from bipdense.drawing import check_homotopy, validate  # noqa: E402

DATA = Path(__file__).parent / "data"


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    limit: float  # seconds
    check: Callable[[], list[str]]  # returns failure messages


def _expect(fails: list[str], cond: bool, msg: str) -> None:
    if not cond:
        fails.append(msg)


def c1_ic_nic() -> list[str]:
    fails: list[str] = []
    for n in (8, 16, 40, 100, 200):
        d = gen_ic(n)
        _expect(fails, 4 * d.m == 9 * n - 16, f"ic n={n}: m={d.m}, want {Fraction(9 * n, 4) - 4}")
        _expect(fails, is_ic_planar(d).holds, f"ic n={n} not IC-planar")
        d = gen_nic(n)
        _expect(fails, 2 * d.m == 5 * n - 10, f"nic n={n}: m={d.m}, want {Fraction(5 * n, 2) - 5}")
        _expect(fails, is_nic_planar(d).holds, f"nic n={n} not NIC-planar")
    return fails


def c2_rac() -> list[str]:
    fails: list[str] = []
    for k in range(1, 9):
        g = gen_rac(k)
        _expect(fails, g.n == 6 * k, f"k={k}: n={g.n}")
        _expect(fails, g.m == 3 * g.n - 9, f"k={k}: m={g.m}, want {3 * g.n - 9}")
        _expect(fails, is_bipartite_consistent(g.graph), f"k={k}: not bipartite")
        _expect(fails, is_rac(g).holds, f"k={k}: a crossing is not orthogonal")
    return fails


def c3_fan() -> list[str]:
    fails: list[str] = []
    for n in range(8, 21):
        d = gen_fan("k4", n)
        _expect(fails, d.m == 4 * n - 16, f"k4 n={n}: m={d.m}")
        _expect(fails, is_fan_planar(d).holds, f"k4 n={n} not fan-planar")
    d = gen_fan("k55e", 10)
    _expect(fails, d.m == 24 and is_fan_planar(d).holds, "K5,5 - e")
    multi = [("k2_multi", n) for n in range(6, 21)] + [("k4_multi", n) for n in range(8, 21)] + [("k55e_multi", 10)]
    for variant, n in multi:
        d = gen_fan(variant, n)
        _expect(fails, d.m == 4 * n - 12, f"{variant} n={n}: m={d.m}, want {4 * n - 12}")
        _expect(fails, is_fan_planar(d).holds, f"{variant} n={n} not fan-planar")
        try:
            check_homotopy(d)
        except Exception as exc:  # noqa: BLE001
            fails.append(f"{variant} n={n}: {exc}")
    return fails


def c4_2planar() -> list[str]:
    fails: list[str] = []
    for n in (16, 24, 48, 96):
        d = gen_2planar(n)
        _expect(fails, 2 * d.m == 7 * n - 24, f"simple n={n}: m={d.m}")
        _expect(fails, is_k_planar(d, 2).holds, f"simple n={n} not 2-planar")
        ps = planar_structure(d, "exact")
        _expect(fails, len(ps.selected) == 2 * n - 4, f"n={n}: |G_p|={len(ps.selected)}")
        _expect(fails, all(len(w) == 4 for w in ps.faces), f"n={n}: a face of G_p is not a quadrangle")
        dm = gen_2planar(n, True)
        _expect(fails, 2 * dm.m == 7 * n - 16, f"multi n={n}: m={dm.m}")
        _expect(fails, is_k_planar(dm, 2).holds, f"multi n={n} not 2-planar")
    return fails


def c5_gaps() -> list[str]:
    fails: list[str] = []

    def gap(family: str, d, want: int) -> None:
        g = max_edges(family, d.n, True) - d.m
        _expect(fails, g == want, f"{family} n={d.n}: gap {g}, want {want}")

    for k in range(1, 9):
        gap("rac", gen_rac(k), 2)
    for n in (16, 24, 48, 96):
        gap("2-planar", gen_2planar(n), 5)
    for n in range(8, 21):
        gap("fan", gen_fan("k4", n), 4)
    for n in (8, 16, 40, 100, 200):
        gap("ic", gen_ic(n), 0)
        gap("nic", gen_nic(n), 0)
    return fails


def c6_sticks() -> list[str]:
    fails: list[str] = []
    d = gen_2planar(24)
    fa = analyze(d, "exact")
    h = fa.h_values
    gp = len(fa.structure.selected)
    _expect(fails, sum(h) == 2 * (d.m - gp) == 56, f"sum h = {sum(h)}, 2(m - |G_p|) = {2 * (d.m - gp)}")
    _expect(fails, Fraction(sum(h), len(h)) < 3, f"average h = {Fraction(sum(h), len(h))}")
    _expect(fails, h.count(2) >= h.count(4), f"#h2 = {h.count(2)} < #h4 = {h.count(4)}")
    _expect(fails, max(h) <= 4, f"max h = {max(h)}")
    return fails


def c7_eight_sticks() -> list[str]:
    fails: list[str] = []
    d = gen_8sticks_fixture()
    cfgs = find_8_sticks(analyze(d, "exact"))
    _expect(fails, len(cfgs) == 1, f"found {len(cfgs)} configurations")
    if cfgs:
        e = eliminate_8_sticks(d, cfgs[0])
        _expect(fails, (e.n, e.m) == (d.n + 1, d.m + 4), f"after: n={e.n}, m={e.m}")
        _expect(fails, is_k_planar(e, 2).holds, "result not 2-planar")
        _expect(fails, is_bipartite_consistent(e.graph), "result not bipartite")
        _expect(fails, not find_8_sticks(analyze(e, "exact")), "configurations remain")
    return fails


def _simple_constructions():
    for n in (8, 16, 40):
        yield f"ic-{n}", gen_ic(n)
        yield f"nic-{n}", gen_nic(n)
    for k in (1, 2, 3, 5):
        yield f"rac-{k}", gen_rac(k)
    for n in (8, 12, 20):
        yield f"fan-k4-{n}", gen_fan("k4", n)
    yield "fan-k55e", gen_fan("k55e", 10)
    for n in (16, 20, 24, 48):
        yield f"2planar-{n}", gen_2planar(n)
    for c in (4, 5, 8):
        yield f"3planar-{c}", gen_3planar(c)
    yield "cylinder-5", gen_cylinder(5)
    yield "8sticks", gen_8sticks_fixture()


def c8_crossing_lemma() -> list[str]:
    fails: list[str] = []
    _expect(fails, cr_lower_bound(20, 85) == 104, f"cr_lower_bound(20, 85) = {cr_lower_bound(20, 85)}")
    for name, d in _simple_constructions():
        cr = len(d.intersections) if hasattr(d, "coords") else d.crossing_count
        _expect(fails, cr >= cr_lower_bound(d.n, d.m), f"{name}: {cr} < {cr_lower_bound(d.n, d.m)}")
    return fails


def c9_kplanar() -> list[str]:
    fails: list[str] = []
    _expect(fails, kplanar_density_bound(100, 8) == 850, f"got {kplanar_density_bound(100, 8)}")
    for k in range(3, 11):
        r = kplanar_density_bound(100, k)
        target = Fraction(17, 8) ** 2 * 2 * k * 100**2
        _expect(fails, r * r >= target and (r - 1) ** 2 < target, f"k={k}: r={r}")
    return fails


def c10_oracle() -> list[str]:
    fails: list[str] = []
    rng = random.Random(20240611)
    fixtures = list(small_fixtures().values())
    cases = []
    for i in range(200):
        if i % 2 == 0:
            cases.append(planarize_geometric(random_geometric(rng)))
        else:
            cases.append(random_subdrawing(rng, rng.choice(fixtures)))
    for i, d in enumerate(cases):
        assert d.m <= 20
        exact = len(planar_structure(d, "exact").selected)
        greedy = len(planar_structure(d, "greedy").selected)
        brute = brute_force_max_plane(d)
        _expect(fails, exact == brute, f"random {i}: exact {exact} != brute {brute}")
        _expect(fails, greedy <= exact, f"random {i}: greedy {greedy} > exact {exact}")
    for name, d in small_fixtures().items():
        d = topological(d)
        exact = len(planar_structure(d, "exact").selected)
        greedy = len(planar_structure(d, "greedy").selected)
        brute = brute_force_plane_size(d)
        _expect(fails, exact == brute, f"{name}: exact {exact} != brute {brute}")
        _expect(fails, greedy <= exact, f"{name}: greedy {greedy} > exact {exact}")
    return fails


def c11_invariants() -> list[str]:
    fails: list[str] = []
    drawings = list(small_fixtures().items()) + list(_simple_constructions())
    drawings += [(p.name, parse_drawing(p.read_bytes())) for p in sorted(DATA.glob("*.json"))]
    _expect(fails, any(DATA.glob("*.json")), "no parsed fixtures found")
    for name, d in drawings:
        try:
            validate(topological(d))
        except Exception as exc:  # noqa: BLE001
            fails.append(f"{name}: {type(exc).__name__}: {exc}")
            continue
        text = write_drawing(d)
        again = write_drawing(parse_drawing(text))
        _expect(fails, text == again, f"{name}: round trip not byte-stable")
        _expect(fails, write_drawing(parse_drawing(again)) == again, f"{name}: second round trip differs")
    return fails


CRITERIA = [
    Criterion(1, "IC / NIC construction counts", 5.0, c1_ic_nic),
    Criterion(2, "RAC family 3n - 9, exactly orthogonal", 2.0, c2_rac),
    Criterion(3, "fan-planar constructions", 2.0, c3_fan),
    Criterion(4, "2-planar constructions and quadrangular G_p", 10.0, c4_2planar),
    Criterion(5, "gaps to the upper bounds", 10.0, c5_gaps),
    Criterion(6, "stick accounting on 2-planar n = 24", 5.0, c6_sticks),
    Criterion(7, "8-sticks find and eliminate", 2.0, c7_eight_sticks),
    Criterion(8, "crossing lower bound", 2.0, c8_crossing_lemma),
    Criterion(9, "k-planar density envelope", 1.0, c9_kplanar),
    Criterion(10, "exact planar structure equals brute force", 60.0, c10_oracle),
    Criterion(11, "model invariants and byte-stable round trips", 10.0, c11_invariants),
]

# Criteria that cannot be met as stated; see the decisions ledger.
KNOWN_UNATTAINABLE = {
    1: "2.5n - 5 edges is impossible for an NIC-planar drawing at n = 8",
    5: "the NIC gap at n = 8 is 1 for the same reason",
}


def run(c: Criterion) -> tuple[bool, str]:
    t0 = time.perf_counter()
    try:
        fails = c.check()
    except Exception as exc:  # noqa: BLE001
        fails = [f"raised {type(exc).__name__}: {exc}"]
    dt = time.perf_counter() - t0
    if dt >= c.limit:
        fails.append(f"runtime {dt:.2f}s over the {c.limit:g}s limit")
    ok = not fails
    line = f"{'PASS' if ok else 'FAIL'} criterion {c.number:2d}: {c.title} ({dt:.2f}s, limit {c.limit:g}s)"
    if fails:
        line += "\n    " + "\n    ".join(fails[:10])
    return ok, line


@pytest.mark.parametrize("c", [
    pytest.param(c, marks=pytest.mark.xfail(strict=True, reason=KNOWN_UNATTAINABLE[c.number]))
    if c.number in KNOWN_UNATTAINABLE else c
    for c in CRITERIA
], ids=lambda c: f"criterion-{c.number}")
def test_criterion(c: Criterion) -> None:
    ok, line = run(c)
    print(line)
    assert ok, line


def main() -> int:
    results = [run(c) for c in CRITERIA]
    for _, line in results:
        print(line)
    passed = sum(ok for ok, _ in results)
    print(f"{passed}/{len(results)} criteria pass")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
