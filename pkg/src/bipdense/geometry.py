"""Straight-line drawings with exact rational coordinates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Sequence

from .drawing import TopologicalDrawing, build_topological
from .errors import DegenerateIntersection
from .graph import AbstractGraph

Point = tuple[Fraction, Fraction]


def as_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p collinear with a-b is assumed; test containment in the closed segment."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def direction_cmp(a: Point, b: Point) -> int:
    """Order direction vectors counter-clockwise starting from the positive x-axis."""

    def half(v: Point) -> int:
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    ha, hb = half(a), half(b)
    if ha != hb:
        return ha - hb
    cr = a[0] * b[1] - a[1] * b[0]
    return -1 if cr > 0 else (1 if cr < 0 else 0)


@dataclass(frozen=True)
class GeometricDrawing:
    graph: AbstractGraph
    coords: tuple[Point, ...]
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.coords) != self.graph.n:
            raise DegenerateIntersection("one coordinate pair per vertex required")
        if len(set(self.coords)) != len(self.coords):
            raise DegenerateIntersection("two vertices share a point")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def segment(self, e: int) -> tuple[Point, Point]:
        u, v = self.graph.edges[e]
        return self.coords[u], self.coords[v]

    def direction(self, e: int) -> Point:
        a, b = self.segment(e)
        return (b[0] - a[0], b[1] - a[1])

    @cached_property
    def intersections(self) -> dict[tuple[int, int], tuple[Point, Fraction, Fraction]]:
        """Proper crossings (e, f) -> (point, parameter on e, parameter on f)."""
        return _intersections(self)


def new_geometric(graph: AbstractGraph, coords: Sequence, metadata: dict | None = None) -> GeometricDrawing:
    g = GeometricDrawing(graph, tuple(as_point(p) for p in coords), dict(metadata or {}))
    g.intersections  # validates degeneracies eagerly
    return g


def _bbox_disjoint(a: Point, b: Point, c: Point, d: Point) -> bool:
    return (
        max(a[0], b[0]) < min(c[0], d[0])
        or max(c[0], d[0]) < min(a[0], b[0])
        or max(a[1], b[1]) < min(c[1], d[1])
        or max(c[1], d[1]) < min(a[1], b[1])
    )


def _intersections(g: GeometricDrawing) -> dict:
    edges = g.graph.edges
    out: dict[tuple[int, int], tuple[Point, Fraction, Fraction]] = {}
    # vertex lying on a non-incident segment
    for e, (u, v) in enumerate(edges):
        a, b = g.coords[u], g.coords[v]
        for x, p in enumerate(g.coords):
            if x in (u, v):
                continue
            if orient(a, b, p) == 0 and on_segment(p, a, b):
                raise DegenerateIntersection(f"vertex {x} lies on edge {e}")
    for e in range(len(edges)):
        a, b = g.segment(e)
        for f in range(e + 1, len(edges)):
            c, d = g.segment(f)
            if _bbox_disjoint(a, b, c, d):
                continue
            shared = set(edges[e]) & set(edges[f])
            o1, o2 = orient(a, b, c), orient(a, b, d)
            o3, o4 = orient(c, d, a), orient(c, d, b)
            if shared:
                if o1 == 0 and o2 == 0:
                    # collinear with a shared endpoint: overlap unless they leave it in opposite directions
                    s = next(iter(shared))
                    p = g.coords[s]
                    q1 = b if a == p else a
                    q2 = d if c == p else c
                    dot = (q1[0] - p[0]) * (q2[0] - p[0]) + (q1[1] - p[1]) * (q2[1] - p[1])
                    if dot > 0 or len(shared) == 2:
                        raise DegenerateIntersection(f"edges {e} and {f} overlap")
                continue
            if o1 * o2 < 0 and o3 * o4 < 0:
                den = (b[0] - a[0]) * (d[1] - c[1]) - (b[1] - a[1]) * (d[0] - c[0])
                t = ((c[0] - a[0]) * (d[1] - c[1]) - (c[1] - a[1]) * (d[0] - c[0])) / den
                s_ = ((c[0] - a[0]) * (b[1] - a[1]) - (c[1] - a[1]) * (b[0] - a[0])) / den
                pt = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                out[(e, f)] = (pt, t, s_)
            elif o1 == 0 and o2 == 0:
                if on_segment(c, a, b) or on_segment(d, a, b) or on_segment(a, c, d):
                    raise DegenerateIntersection(f"edges {e} and {f} overlap")
            elif (o1 == 0 and on_segment(c, a, b)) or (o2 == 0 and on_segment(d, a, b)) or (
                o3 == 0 and on_segment(a, c, d)
            ) or (o4 == 0 and on_segment(b, c, d)):
                raise DegenerateIntersection(f"edges {e} and {f} touch")
    pts: dict[Point, tuple[int, int]] = {}
    for pair, (pt, _, _) in out.items():
        if pt in pts:
            raise DegenerateIntersection(f"crossings {pts[pt]} and {pair} meet at one point")
        pts[pt] = pair
    return out


def planarize_geometric(g: GeometricDrawing) -> TopologicalDrawing:
    inter = g.intersections
    edges = g.graph.edges
    n = g.graph.n
    pairs = sorted(inter)
    cid = {p: k for k, p in enumerate(pairs)}
    per_edge: list[list[tuple[Fraction, int]]] = [[] for _ in edges]
    for (e, f), (pt, t, s) in inter.items():
        per_edge[e].append((t, cid[(e, f)]))
        per_edge[f].append((s, cid[(e, f)]))
    edge_crossings = [[k for _, k in sorted(lst)] for lst in per_edge]
    key = cmp_to_key(direction_cmp)
    rotation: dict = {}
    for x in range(n):
        ends = []
        for e, (u, v) in enumerate(edges):
            if x == u:
                dv = g.direction(e)
                ends.append((dv, (e, 1)))
            elif x == v:
                dv = g.direction(e)
                ends.append(((-dv[0], -dv[1]), (e, 0)))
        ends.sort(key=lambda t: key(t[0]))
        rotation[x] = [end for _, end in ends]
    for (e, f), k in cid.items():
        de, df = g.direction(e), g.direction(f)
        ends = [(de, (e, 1)), ((-de[0], -de[1]), (e, 0)), (df, (f, 1)), ((-df[0], -df[1]), (f, 0))]
        ends.sort(key=lambda t: key(t[0]))
        rotation[("c", k)] = [end for _, end in ends]
    outer = _outer_selector(g)
    md = dict(g.metadata)
    md["crossing_points"] = {k: inter[p][0] for p, k in cid.items()}
    d = build_topological(g.graph, edge_crossings, rotation, outer, metadata=md)
    return d


def _outer_selector(g: GeometricDrawing):
    edges = g.graph.edges
    cand = [x for x in range(g.n) if any(x in uv for uv in edges)]
    if not cand:
        return None
    x = min(cand, key=lambda i: (g.coords[i][0], g.coords[i][1]))
    ends = []
    for e, (u, v) in enumerate(edges):
        if x == u:
            ends.append((g.direction(e), (e, 1)))
        elif x == v:
            dv = g.direction(e)
            ends.append(((-dv[0], -dv[1]), (e, 0)))
    key = cmp_to_key(direction_cmp)
    ends.sort(key=lambda t: key(t[0]))
    west = (Fraction(-1), Fraction(0))
    # the last end strictly before the west direction in ccw order bounds the outer face
    before = [end for dv, end in ends if direction_cmp(dv, west) < 0]
    chosen = before[-1] if before else ends[-1][1]
    return (x,) + tuple(chosen)


def crossing_count_bruteforce(g: GeometricDrawing) -> int:
    """Count properly intersecting non-adjacent segment pairs without shortcuts."""
    cnt = 0
    edges = g.graph.edges
    for e in range(len(edges)):
        a, b = g.segment(e)
        for f in range(e + 1, len(edges)):
            if set(edges[e]) & set(edges[f]):
                continue
            c, d = g.segment(f)
            if orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0:
                cnt += 1
    return cnt
