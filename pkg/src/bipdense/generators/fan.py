"""Fan-planar drawings of K_{4,n-4}, K_{5,5} - e and K_{2,n-2}, with multiedge variants.

All start from the planar K_{2,m}: b_1..b_m on a horizontal line, a_1 above
and a_2 below; face F_j lies between b_j and b_{j+1}. A third apex a_3 sits
in F_1 and reaches the far b's by crossing a_1's edges only; a fourth apex a_4
sits in F_{m-1} and crosses a_2's edges only.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..builder import Builder
from ..drawing import TopologicalDrawing
from ..errors import BadSize, RoutingError
from ..graph import Part

VARIANTS = ("k4", "k2_multi", "k55e", "k4_multi", "k55e_multi")


@dataclass
class FanFrame:
    builder: Builder
    a: list[int]
    b: list[int]
    ea: list[dict[int, int]]  # ea[i][j]: edge id of a_{i+1} b_{j+1}

    def e(self, i: int, j: int) -> int:
        """Edge a_i b_j with 1-based indices."""
        return self.ea[i - 1][j - 1]

    def route(self, i: int, j: int, via: list[int]) -> int:
        return self.builder.route(self.a[i - 1], self.b[j - 1], via)


def _k2(m: int, multigraph: bool) -> FanFrame:
    b = Builder(multigraph=multigraph)
    a1, a2 = b.add_vertex(Part.A), b.add_vertex(Part.A)
    bs = [b.add_vertex(Part.B) for _ in range(m)]
    e1 = {j: b.add_abstract_edge(a1, x) for j, x in enumerate(bs)}
    e2 = {j: b.add_abstract_edge(a2, x) for j, x in enumerate(bs)}
    # a_1 sees b_1..b_m counter-clockwise below it, a_2 sees them clockwise above it
    b.set_rotation(a1, [e1[j] for j in range(m)])
    b.set_rotation(a2, [e2[j] for j in reversed(range(m))])
    for j, x in enumerate(bs):
        b.set_rotation(x, [e1[j], e2[j]])
    # outer face lies left of b_1 -> a_1
    b.outer_he = 2 * b.edge_segs[e1[0]][0] + 1
    return FanFrame(b, [a1, a2], bs, [e1, e2])


def _face_left_of(fr: FanFrame, e: int, forward: bool) -> int:
    return 2 * fr.builder.edge_segs[e][0] + (0 if forward else 1)


def _add_apices(fr: FanFrame) -> None:
    m = len(fr.b)
    b = fr.builder
    # F_1 lies left of a_1 -> b_1; F_{m-1} lies left of b_m -> a_1
    a3 = b.place_vertex_in_face(Part.A, _face_left_of(fr, fr.e(1, 1), True))
    fr.a.append(a3)
    fr.ea.append({})
    fr.ea[2][0] = fr.route(3, 1, [])
    fr.ea[2][1] = fr.route(3, 2, [])
    for j in range(3, m + 1):
        fr.ea[2][j - 1] = fr.route(3, j, [fr.e(1, i) for i in range(2, j)])
    a4 = b.place_vertex_in_face(Part.A, _face_left_of(fr, fr.e(2, m), True))
    fr.a.append(a4)
    fr.ea.append({})
    fr.ea[3][m - 1] = fr.route(4, m, [])
    fr.ea[3][m - 2] = fr.route(4, m - 1, [])
    for j in range(m - 2, 0, -1):
        fr.ea[3][j - 1] = fr.route(4, j, [fr.e(2, i) for i in range(m - 1, j, -1)])


def _add_fifth(fr: FanFrame) -> None:
    """a_5 in the outer face, adjacent to every b except b_3 (m = 5)."""
    b = fr.builder
    a5 = b.place_vertex_in_face(Part.A, b.outer_he)
    fr.a.append(a5)
    fr.ea.append({})
    fr.ea[4][0] = fr.route(5, 1, [])
    fr.ea[4][1] = fr.route(5, 2, [fr.e(1, 1), fr.e(3, 1)])
    fr.ea[4][3] = fr.route(5, 4, [fr.e(2, 5), fr.e(4, 5)])
    fr.ea[4][4] = fr.route(5, 5, [])


def gen_fan(variant: str, n: int) -> TopologicalDrawing:
    if variant not in VARIANTS:
        raise ValueError(f"unknown fan variant {variant!r}; expected one of {VARIANTS}")
    multigraph = variant.endswith("_multi")
    if variant in ("k4", "k4_multi"):
        if n < 8:
            raise BadSize(f"{variant} needs n >= 8, got {n}")
        fr = _k2(n - 4, multigraph)
        _add_apices(fr)
    elif variant in ("k55e", "k55e_multi"):
        if n != 10:
            raise BadSize(f"{variant} needs n = 10, got {n}")
        fr = _k2(5, multigraph)
        _add_apices(fr)
        _add_fifth(fr)
    else:
        if n < 6:
            raise BadSize(f"{variant} needs n >= 6, got {n}")
        fr = _k2(n - 2, True)
    if multigraph:
        _MULTI[variant](fr)
    return fr.builder.to_drawing({"generator": "fan", "variant": variant, "n": n})


def _route_from(fr: FanFrame, i: int, j: int, corner: int, via: list[int]) -> int:
    """Route a_i b_j leaving a_i right after the half-edge ``corner`` in its rotation."""
    b = fr.builder
    for plan in b.route_plans(fr.a[i - 1], fr.b[j - 1], via):
        if plan[0] == corner:
            return b.commit_plan(fr.a[i - 1], fr.b[j - 1], plan)
    raise RoutingError(f"no route for a{i} b{j} crossing {via}")


def _first_half(fr: FanFrame, e: int) -> int:
    return 2 * fr.builder.edge_segs[e][0]


def _k2_multi(fr: FanFrame) -> None:
    """2(m - 2) copies: P_s = a_1 b_1 around b_2..b_{s+1} and Q_t = a_2 b_2 around b_3..b_{t+1}.

    P_s leaves a_1 in F_{s+1} and runs below the b's; Q_t leaves a_2 in F_{t+1}
    (F_m is the outer face) and runs above them. Every P_s crosses every Q_t
    exactly once, so all P's go in first and each Q lists its crossings in order.
    """
    m = len(fr.b)
    P: dict[int, int] = {}
    for s in range(1, m - 1):
        corner = _first_half(fr, fr.e(1, s + 1))
        P[s] = _route_from(fr, 1, 1, corner, [fr.e(2, j + 1) for j in range(s, 0, -1)])
    for t in range(2, m):
        via = [P[s] for s in range(m - 2, t, -1)]
        if t in P:
            via.append(P[t])
        for j in range(t, 1, -1):
            via.append(fr.e(1, j + 1))
            via.append(P[j - 1])
        corner = _first_half(fr, fr.e(2, (t + 1) % m + 1))
        _route_from(fr, 2, 2, corner, via)


def _k4_multi(fr: FanFrame) -> None:
    """Four copies: a_1 b_1 around a_3, a_1 b_1 and a_4 b_1 around b_m, a_3 b_m through the outer face."""
    m = len(fr.b)
    fr.route(1, 1, [fr.e(3, j) for j in range(m, 1, -1)])
    fr.route(1, 1, [fr.e(3, m), fr.e(4, m), fr.e(2, m)])
    fr.route(4, 1, [fr.e(2, m)])
    fr.route(3, m, [fr.e(1, 1)])


def _k55e_multi(fr: FanFrame) -> None:
    fr.route(1, 2, [fr.e(3, 1)])
    fr.route(1, 4, [fr.e(5, 5), fr.e(2, 5), fr.e(4, 5)])
    fr.route(2, 2, [fr.e(5, 1), fr.e(1, 1), fr.e(3, 1)])
    fr.route(2, 4, [fr.e(4, 5)])


_MULTI = {"k2_multi": _k2_multi, "k4_multi": _k4_multi, "k55e_multi": _k55e_multi}
