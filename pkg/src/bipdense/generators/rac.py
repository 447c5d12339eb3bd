"""RAC drawings of bipartite graphs with 3n - 9 edges.

Levels are nested hexagons c^1, ..., c^k. G_1 is c^1 with the two long
diagonals c_0 c_3 and c_1 c_4, which cross at a right angle. Level j adds a
hexagon D around c = c^{j-1} and the spokes c_i D_{i+1}, c_{i+1} D_i; the two
spokes of sector i (between rays through c_i and c_{i+1}) cross, and they are
perpendicular iff (D_{i+1} - c_i) . (D_i - c_{i+1}) = 0.

For D = lam * c (scaling about the origin) this reads
(lam^2 + 1) c_i . c_{i+1} = lam (|c_i|^2 + |c_{i+1}|^2); HEX solves it for
lam = 4 with integer points, so the middle levels are exact scaled copies and
every sector is a trapezoid inside its own angular wedge. The innermost and
outermost rings are one-off solutions of the same equations: INNER carries the
perpendicular chords, OUTER is dented so that D_1 D_4 is a hull edge, which
holds the one extra edge.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import BadSize
from ..geometry import GeometricDrawing, new_geometric
from ..graph import Part, new_graph

Q = Fraction
LAM = 4

HEX = ((-20, -12), (1, -21), (10, -6), (10, 6), (1, 21), (-20, 12))
INNER = ((-5, -1), (0, -6), (1, -5), (Q(35, 9), -1), (0, Q(464, 99)), (Q(-2819, 620), Q(723, 124)))
# final ring around HEX; the extra edge joins OUTER[1] and OUTER[4]
OUTER = ((-84, -67), (Q(9608, 113), Q(-23286, 113)), (49, -3), (Q(1094, 71), Q(1238, 71)), (33, 99),
         (Q(-342356, 1381), Q(238404, 1381)))
OUTER_EXTRA = (1, 4)
# final ring around INNER when k = 2; the extra edge joins OUTER2[0] and OUTER2[3]
OUTER2 = ((-24, 7), (Q(-319, 17), Q(-449, 17)), (13, -18), (Q(206460, 4279), Q(782671, 38511)), (0, 11),
          (Q(-28752055, 6498756), Q(55748065, 6498756)))
OUTER2_EXTRA = (0, 3)
# k = 1: a hexagon with chords 0-3 and 1-4 crossing at a right angle; 2-5 is a hull edge
BASE1 = ((0, 1), (3, 1), (3, 4), (2, 3), (1, 3), (0, 4))


def _scaled(hexagon, s) -> list[tuple[Fraction, Fraction]]:
    return [(Q(x) * s, Q(y) * s) for x, y in hexagon]


def rac_levels(k: int) -> tuple[list[list[tuple[Fraction, Fraction]]], tuple[int, int]]:
    """Hexagons from the inside out, plus the extra edge as indices into the last one."""
    if k < 1:
        raise BadSize(f"gen_rac needs k >= 1, got {k}")
    if k == 1:
        return [_scaled(BASE1, 1)], (2, 5)
    if k == 2:
        return [_scaled(INNER, 1), _scaled(OUTER2, 1)], OUTER2_EXTRA
    levels = [_scaled(INNER, 1)]
    levels += [_scaled(HEX, LAM**j) for j in range(k - 2)]
    levels.append(_scaled(OUTER, LAM ** (k - 3)))
    return levels, OUTER_EXTRA


def gen_rac(k: int) -> GeometricDrawing:
    levels, extra = rac_levels(k)
    coords = [p for hexagon in levels for p in hexagon]
    parts = [Part.A if i % 2 == 0 else Part.B for i in range(6)] * k
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4)]
    for j in range(1, k):
        c, d = 6 * (j - 1), 6 * j
        edges += [(d + i, d + (i + 1) % 6) for i in range(6)]
        for i in range(6):
            edges += [(c + i, d + (i + 1) % 6), (c + (i + 1) % 6, d + i)]
    last = 6 * (k - 1)
    edges.append((last + extra[0], last + extra[1]))
    graph = new_graph(6 * k, parts, edges)
    return new_geometric(graph, coords, {"generator": "rac", "k": k})
