"""Membership tests for beyond-planar drawing families on fixed drawings."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Optional

from .drawing import TopologicalDrawing
from .geometry import GeometricDrawing


@dataclass(frozen=True)
class FamilyVerdict:
    family: str
    holds: bool
    witness: Optional[Any] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _ok(family: str) -> FamilyVerdict:
    return FamilyVerdict(family, True)


def is_k_planar(d: TopologicalDrawing, k: int) -> FamilyVerdict:
    fam = f"{k}-planar"
    for e in range(d.m):
        c = len(d.edge_crossings[e])
        if c > k:
            return FamilyVerdict(fam, False, e, f"edge {e} has {c} crossings")
    return _ok(fam)


def _crossing_endpoint_sets(d: TopologicalDrawing) -> list[tuple[int, frozenset[int]]]:
    return [(k, frozenset(d.graph.edges[e]) | frozenset(d.graph.edges[f])) for k, (e, f) in enumerate(d.crossings)]


def is_ic_planar(d: TopologicalDrawing) -> FamilyVerdict:
    base = is_k_planar(d, 1)
    if not base:
        return FamilyVerdict("IC-planar", False, base.witness, base.reason)
    owner: dict[int, int] = {}
    for k, verts in _crossing_endpoint_sets(d):
        for x in verts:
            if x in owner:
                return FamilyVerdict("IC-planar", False, x, f"vertex {x} is in crossings {owner[x]} and {k}")
            owner[x] = k
    return _ok("IC-planar")


def is_nic_planar(d: TopologicalDrawing) -> FamilyVerdict:
    base = is_k_planar(d, 1)
    if not base:
        return FamilyVerdict("NIC-planar", False, base.witness, base.reason)
    seen: dict[frozenset[int], int] = {}
    for k, verts in _crossing_endpoint_sets(d):
        for pair in combinations(sorted(verts), 2):
            key = frozenset(pair)
            if key in seen:
                return FamilyVerdict(
                    "NIC-planar", False, (seen[key], k), f"crossings {seen[key]} and {k} share vertices {sorted(key)}"
                )
            seen[key] = k
    return _ok("NIC-planar")


def fan_side(d: TopologicalDrawing, e: int, f: int, apex: int) -> int:
    """Side (+1 left, -1 right of e's u->v direction) on which f's half toward apex leaves the crossing."""
    k = d.crossing_of(e, f)
    node = d.dummy_node(k)
    rot = list(d.rotation[node])
    fu, _ = d.graph.edges[f]
    toward = (f, 0) if apex == fu else (f, 1)
    # at a dummy, e's end (e, 1) points toward v; ccw after it lies the left side of e's traversal
    i_fwd = rot.index((e, 1))
    return 1 if rot[(i_fwd + 1) % 4] == toward else -1


def is_fan_planar(d: TopologicalDrawing) -> FamilyVerdict:
    g = d.graph
    for e in range(d.m):
        cross = d.crossing_edges(e)
        if len(cross) < 2:
            continue
        common = set(g.edges[cross[0]])
        for f in cross[1:]:
            common &= set(g.edges[f])
        if not common:
            return FamilyVerdict("fan-planar", False, (e, tuple(cross)), f"edge {e} is crossed by independent edges")
        ok = False
        for apex in sorted(common):
            sides = {fan_side(d, e, f, apex) for f in cross}
            if len(sides) == 1:
                ok = True
                break
        if not ok:
            return FamilyVerdict(
                "fan-planar", False, (e, tuple(cross)), f"edge {e} is crossed by a fan from both sides"
            )
    return _ok("fan-planar")


def common_endpoint(d: TopologicalDrawing, e: int) -> Optional[int]:
    """The apex of the fan crossing e (lowest id if two parallel edges are the only crossers)."""
    cross = d.crossing_edges(e)
    if not cross:
        return None
    common = set(d.graph.edges[cross[0]])
    for f in cross[1:]:
        common &= set(d.graph.edges[f])
    if not common:
        return None
    for apex in sorted(common):
        if len({fan_side(d, e, f, apex) for f in cross}) == 1:
            return apex
    return None


def crossing_graph(d: TopologicalDrawing) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {e: set() for e in range(d.m)}
    for e, f in d.crossings:
        adj[e].add(f)
        adj[f].add(e)
    return adj


def find_clique(adj: dict[int, set[int]], k: int) -> Optional[list[int]]:
    """Exhaustive search with degree pruning for a k-clique."""
    if k <= 0:
        return []
    cand = sorted(v for v in adj if len(adj[v]) >= k - 1)

    def extend(clique: list[int], pool: list[int]) -> Optional[list[int]]:
        if len(clique) == k:
            return clique
        if len(clique) + len(pool) < k:
            return None
        for i, v in enumerate(pool):
            nxt = [w for w in pool[i + 1 :] if w in adj[v]]
            r = extend(clique + [v], nxt)
            if r is not None:
                return r
        return None

    return extend([], cand)


def is_quasi_planar(d: TopologicalDrawing, k: int) -> FamilyVerdict:
    if k < 2:
        raise ValueError("k must be at least 2")
    fam = f"{k}-quasi-planar"
    c = find_clique(crossing_graph(d), k)
    if c is not None:
        return FamilyVerdict(fam, False, tuple(c), f"edges {c} cross pairwise")
    return _ok(fam)


def is_rac(g: GeometricDrawing) -> FamilyVerdict:
    for (e, f) in sorted(g.intersections):
        de, df = g.direction(e), g.direction(f)
        if de[0] * df[0] + de[1] * df[1] != 0:
            return FamilyVerdict("RAC", False, (e, f), f"edges {e} and {f} cross at a non-right angle")
    return _ok("RAC")


FAMILIES = ("k-planar", "1-planar", "2-planar", "3-planar", "IC-planar", "NIC-planar", "fan-planar", "quasi-planar", "RAC")


def check_family(d, family: str, k: Optional[int] = None) -> FamilyVerdict:
    """Dispatch by family name; geometric drawings are planarized for topological families."""
    from .geometry import planarize_geometric

    fam = family.lower()
    if fam == "rac":
        if not isinstance(d, GeometricDrawing):
            raise TypeError("RAC needs a geometric drawing")
        return is_rac(d)
    td = planarize_geometric(d) if isinstance(d, GeometricDrawing) else d
    if fam in ("ic", "ic-planar"):
        return is_ic_planar(td)
    if fam in ("nic", "nic-planar"):
        return is_nic_planar(td)
    if fam in ("fan", "fan-planar"):
        return is_fan_planar(td)
    if fam.endswith("-planar") and fam[:-7].isdigit():
        return is_k_planar(td, int(fam[:-7]))
    if fam in ("k-planar", "kplanar"):
        return is_k_planar(td, 1 if k is None else k)
    if fam in ("quasi-planar", "k-quasi-planar", "quasi"):
        return is_quasi_planar(td, 3 if k is None else k)
    from .errors import UnknownFamily

    raise UnknownFamily(family)
