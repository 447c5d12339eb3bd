"""Edge-density and crossing-number formulas, evaluated exactly."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence, Union

from .checkers import FamilyVerdict, check_family
from .drawing import TopologicalDrawing
from .errors import BadSize, UnknownFamily
from .geometry import GeometricDrawing
from .graph import is_bipartite_consistent

Q = Fraction
SMALL_N = 5


@dataclass(frozen=True)
class Linear:
    """a*n + b."""

    a: Fraction
    b: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.a * n + self.b


def _lin(a, b) -> Linear:
    return Linear(Q(a), Q(b))


# family -> (general tight or reference bound, bipartite lower, bipartite upper)
TABLE: dict[str, tuple[Optional[Linear], Optional[Linear], Optional[Linear]]] = {
    "planar": (_lin(3, -6), _lin(2, -4), _lin(2, -4)),
    "ic": (_lin(Q(7, 2), -7), _lin(Q(9, 4), -4), _lin(Q(9, 4), -4)),
    "nic": (_lin(Q(18, 5), Q(-36, 5)), _lin(Q(5, 2), -5), _lin(Q(5, 2), -5)),
    "1-planar": (_lin(4, -8), _lin(3, -8), _lin(3, -8)),
    "rac": (_lin(4, -10), _lin(3, -9), _lin(3, -7)),
    "2-planar": (_lin(5, -10), _lin(Q(7, 2), -12), _lin(Q(7, 2), -7)),
    "fan": (_lin(5, -10), _lin(4, -16), _lin(4, -12)),
    "3-planar": (_lin(Q(11, 2), -11), None, None),
}

_ALIASES = {
    "plane": "planar",
    "ic-planar": "ic",
    "nic-planar": "nic",
    "1planar": "1-planar",
    "2planar": "2-planar",
    "3planar": "3-planar",
    "fan-planar": "fan",
    "rac": "rac",
}


def normalize_family(family: str) -> str:
    f = family.strip().lower()
    f = _ALIASES.get(f, f)
    if f in TABLE:
        return f
    raise UnknownFamily(family)


def small_n_cap(n: int) -> Fraction:
    """Trivial cap for tiny n: bipartite planar 2n - 4 (or K_{n/2,n/2} when larger), at most n(n-1)/2."""
    return Q(min(max(2 * n - 4, (n * n) // 4), n * (n - 1) // 2))


def max_edges_info(family: str, n: int, bipartite: bool = True, kind: str = "upper") -> tuple[Optional[Fraction], str]:
    """(bound, regime) with regime "table" or "small-n"; bound is None when no value is known."""
    fam = normalize_family(family)
    if kind not in ("upper", "lower"):
        raise ValueError("kind must be 'upper' or 'lower'")
    if n < SMALL_N:
        return small_n_cap(n), "small-n"
    general, lower, upper = TABLE[fam]
    if not bipartite:
        return (general(n) if general else None), "table"
    if fam == "3-planar":
        if kind == "upper":
            return kplanar_density_bound(n, 3), "table"
        from .generators.cylinder import THREE_PLANAR_CONSTANT

        return Q(4 * n - THREE_PLANAR_CONSTANT), "construction"
    f = upper if kind == "upper" else lower
    return f(n), "table"


def max_edges(family: str, n: int, bipartite: bool = True, kind: str = "upper") -> Fraction:
    value, _ = max_edges_info(family, n, bipartite, kind)
    if value is None:
        raise UnknownFamily(f"no {kind} bound for {family}")
    return value


def cr_lower_bound(n: int, m: int) -> Fraction:
    """max(0, 3m - 17n/2 + 19, 16 m^3 / (289 n^2) when m >= 17n/4)."""
    if n < 3:
        raise BadSize(f"need n >= 3, got {n}")
    best = max(Q(0), 3 * Q(m) - Q(17, 2) * n + 19)
    if 4 * m >= 17 * n:
        best = max(best, Q(16 * m**3, 289 * n * n))
    return best


def _ceil_sqrt(x: Fraction) -> Fraction:
    """Exact sqrt when x is a rational square, else the least integer r with r^2 >= x."""
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Q(rp, rq)
    r = isqrt(p // q)
    while r * r < x:
        r += 1
    return Q(r)


def kplanar_density_bound(n: int, k: int) -> Fraction:
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return Q(3 * n - 8)
    if k == 2:
        return Q(7, 2) * n - 7
    return _ceil_sqrt(Q(289, 64) * 2 * k * n * n)


@dataclass(frozen=True)
class FamilyBound:
    family: str
    member: FamilyVerdict
    upper_bound: Optional[Fraction]
    lower_bound_construction: Optional[Fraction]
    regime: str


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    bipartite: bool
    simple: bool
    crossings: int
    crossing_floor: Optional[Fraction]
    entries: tuple[FamilyBound, ...] = field(default_factory=tuple)

    @property
    def crossing_ok(self) -> Optional[bool]:
        if self.crossing_floor is None:
            return None
        return self.crossings >= self.crossing_floor

    def within_upper(self, family: str) -> Optional[bool]:
        for en in self.entries:
            if en.family == normalize_family(family):
                return None if en.upper_bound is None else self.m <= en.upper_bound
        raise KeyError(family)

    def ok(self) -> bool:
        """Every verdict that applies holds."""
        for en in self.entries:
            if en.upper_bound is not None and en.member.holds and self.m > en.upper_bound:
                return False
        return self.crossing_ok is not False

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "bipartite": self.bipartite,
            "simple": self.simple,
            "crossings": self.crossings,
            "crossing_floor": _q(self.crossing_floor),
            "crossing_ok": self.crossing_ok,
            "families": [
                {
                    "family": en.family,
                    "member": en.member.holds,
                    "witness": repr(en.member.witness) if en.member.witness is not None else None,
                    "upper_bound": _q(en.upper_bound),
                    "lower_bound_construction": _q(en.lower_bound_construction),
                    "within_upper": self.within_upper(en.family),
                    "regime": en.regime,
                }
                for en in self.entries
            ],
        }


def _q(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(x)


_CHECK_NAME = {"planar": "0-planar", "ic": "ic", "nic": "nic", "1-planar": "1-planar", "2-planar": "2-planar",
               "3-planar": "3-planar", "fan": "fan", "rac": "rac"}


def verify_drawing(d: Union[TopologicalDrawing, GeometricDrawing], families: Sequence[str]) -> BoundsReport:
    g = d.graph
    bip = is_bipartite_consistent(g)
    simple = not g.has_parallel_edges()
    crossings = len(d.intersections) if isinstance(d, GeometricDrawing) else d.crossing_count
    floor = cr_lower_bound(g.n, g.m) if (bip and simple and g.n >= 3) else None
    entries = []
    for fam in families:
        f = normalize_family(fam)
        if f == "rac" and not isinstance(d, GeometricDrawing):
            verdict = FamilyVerdict("RAC", False, None, "RAC needs a geometric drawing")
        else:
            verdict = check_family(d, _CHECK_NAME[f])
        up, regime = max_edges_info(f, g.n, bip, "upper")
        low = None
        if bip and regime != "small-n":
            low, _ = max_edges_info(f, g.n, bip, "lower")
        entries.append(FamilyBound(f, verdict, up, low, regime))
    return BoundsReport(g.n, g.m, bip, simple, crossings, floor, tuple(entries))
