"""Small hand-built drawings exercising particular analysis paths."""
from __future__ import annotations

from ..drawing import TopologicalDrawing
from .cylinder import _edge_between, cylinder

# Four through-edges around the face T(1, 2), then sticks raising every arm
# face to h = 4. Entries: (endpoint, endpoint, crossed edges by endpoints).
_THROUGH = (
    ((1, 1), (0, 3), (((1, 2), (2, 2)), ((1, 2), (1, 3)))),
    ((1, 1), (3, 2), (((1, 2), (2, 2)), ((2, 2), (2, 3)))),
    ((0, 3), (2, 4), (((1, 2), (1, 3)), ((1, 3), (2, 3)))),
    ((3, 2), (2, 4), (((2, 2), (2, 3)), ((1, 3), (2, 3)))),
)
_FILL = (
    ((0, 0), (0, 3), (((0, 1), (1, 1)), ((0, 2), (1, 2)))),
    ((1, 0), (2, 2), (((1, 1), (2, 1)),)),
    ((3, 0), (2, 2), (((1, 0), (2, 0)), ((1, 1), (2, 1)))),
    ((3, 1), (0, 3), (((0, 1), (0, 2)), ((0, 2), (1, 2)))),
    ((3, 1), (2, 3), (((3, 2), (0, 2)), ((3, 2), (3, 3)))),
    ((0, 2), (2, 3), (((3, 2), (3, 3)),)),
    ((1, 3), (3, 4), (((1, 4), (2, 4)), ((2, 4), (2, 5)))),
    ((1, 3), (0, 5), (((1, 4), (2, 4)), ((1, 5), (2, 5)))),
)


def gen_8sticks_fixture() -> TopologicalDrawing:
    """A 2-planar drawing on 24 vertices with 56 edges and one 8-sticks configuration."""
    cyl = cylinder(6)
    for a, b, crossed in _THROUGH + _FILL:
        cyl.route(a, b, [_edge_between(cyl, p, q) for p, q in crossed])
    return cyl.drawing(generator="8sticks-fixture", n=24)
