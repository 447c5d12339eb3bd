"""Topological drawings stored as planarizations with a rotation system.

Planarization nodes are numbered 0..n-1 for the real vertices and n..n+X-1 for
the dummy (crossing) vertices. An *end* ``(e, d)`` is the piece of edge ``e``
leaving a node, heading toward ``v(e)`` when ``d == 1`` and toward ``u(e)``
when ``d == 0``. Rotations list ends in counter-clockwise order.

Internally every segment ``s`` of the planarization owns the half-edges ``2s``
(along its edge, from u toward v) and ``2s+1`` (reverse). The face to the left
of a half-edge ``h`` continues with ``next(h)``: the clockwise neighbour of
``twin(h)`` at the head of ``h``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    AdjacentEdgesCross,
    EdgePairCrossesTwice,
    EulerViolation,
    HomotopicMultiedge,
    RotationInconsistent,
    SelfCrossing,
)
from .graph import AbstractGraph

log = logging.getLogger(__name__)

End = tuple[int, int]


@dataclass(frozen=True)
class TopologicalDrawing:
    graph: AbstractGraph
    crossings: tuple[tuple[int, int], ...]  # dummy k (node n+k) -> (e, f), e < f
    edge_crossings: tuple[tuple[int, ...], ...]  # per edge: dummy ids from u to v
    rotation: tuple[tuple[End, ...], ...]  # per node, ccw
    outer: Optional[tuple[int, int, int]] = None  # (node, e, d): outer face lies left of this end
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    # ---- basic accessors -------------------------------------------------
    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def node_count(self) -> int:
        return self.graph.n + len(self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def is_dummy(self, x: int) -> bool:
        return x >= self.graph.n

    def dummy_node(self, k: int) -> int:
        return self.graph.n + k

    def path_nodes(self, e: int) -> list[int]:
        u, v = self.graph.edges[e]
        return [u] + [self.graph.n + k for k in self.edge_crossings[e]] + [v]

    def crossing_edges(self, e: int) -> list[int]:
        """Edges crossing ``e`` in order from u(e) to v(e)."""
        out = []
        for k in self.edge_crossings[e]:
            a, b = self.crossings[k]
            out.append(b if a == e else a)
        return out

    def crossing_of(self, e: int, f: int) -> Optional[int]:
        return self._pair_index.get((min(e, f), max(e, f)))

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.crossings)}

    def crossings_per_edge(self) -> dict[int, int]:
        return {e: len(cs) for e, cs in enumerate(self.edge_crossings)}

    def crossing_pairs(self) -> list[tuple[int, int]]:
        return list(self.crossings)

    # ---- half-edge structure --------------------------------------------
    @cached_property
    def _seg_offset(self) -> list[int]:
        off, acc = [], 0
        for cs in self.edge_crossings:
            off.append(acc)
            acc += len(cs) + 1
        return off

    @cached_property
    def segment_count(self) -> int:
        return sum(len(cs) + 1 for cs in self.edge_crossings)

    @cached_property
    def _seg_info(self) -> list[tuple[int, int, int, int]]:
        """Per segment: (edge, index along edge, tail node, head node)."""
        out = []
        for e in range(self.m):
            p = self.path_nodes(e)
            for i in range(len(p) - 1):
                out.append((e, i, p[i], p[i + 1]))
        return out

    def half_edge(self, x: int, end: End) -> int:
        e, d = end
        p = self.path_nodes(e)
        i = p.index(x)
        s = self._seg_offset[e] + (i if d == 1 else i - 1)
        return 2 * s if d == 1 else 2 * s + 1

    @cached_property
    def _origins(self) -> list[int]:
        out = []
        for _, _, a, b in self._seg_info:
            out += (a, b)
        return out

    def he_origin(self, h: int) -> int:
        return self._origins[h]

    def he_dest(self, h: int) -> int:
        return self._origins[h ^ 1]

    def he_edge(self, h: int) -> int:
        return self._seg_info[h >> 1][0]

    def he_end(self, h: int) -> End:
        return (self.he_edge(h), 1 if h % 2 == 0 else 0)

    @cached_property
    def _rot_he(self) -> list[list[int]]:
        return [[self.half_edge(x, end) for end in rot] for x, rot in enumerate(self.rotation)]

    @cached_property
    def _rot_pos(self) -> dict[int, int]:
        pos = {}
        for rot in self._rot_he:
            for i, h in enumerate(rot):
                pos[h] = i
        return pos

    def he_next(self, h: int) -> int:
        t = h ^ 1
        x = self.he_origin(t)
        rot = self._rot_he[x]
        return rot[self._rot_pos[t] - 1]

    def rot_succ(self, h: int) -> int:
        """Counter-clockwise successor of half-edge h around its origin."""
        rot = self._rot_he[self.he_origin(h)]
        return rot[(self._rot_pos[h] + 1) % len(rot)]

    @cached_property
    def _faces(self) -> tuple[list[list[int]], dict[int, int]]:
        face_of: dict[int, int] = {}
        faces: list[list[int]] = []
        for h in range(2 * self.segment_count):
            if h in face_of:
                continue
            walk, cur = [], h
            while cur not in face_of:
                face_of[cur] = len(faces)
                walk.append(cur)
                cur = self.he_next(cur)
            if cur != h:
                raise RotationInconsistent("face walk does not close")
            faces.append(walk)
        return faces, face_of

    def faces(self) -> list[list[int]]:
        """Faces as cyclic half-edge walks (face interior on the left)."""
        return self._faces[0]

    def face_of(self, h: int) -> int:
        return self._faces[1][h]

    def face_nodes(self, fid: int) -> list[int]:
        return [self.he_origin(h) for h in self.faces()[fid]]

    @cached_property
    def outer_face_id(self) -> Optional[int]:
        if self.outer is None:
            return None
        x, e, d = self.outer
        return self.face_of(self.half_edge(x, (e, d)))

    # ---- components -----------------------------------------------------
    @cached_property
    def components(self) -> list[list[int]]:
        parent = list(range(self.node_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for _, _, a, b in self._seg_info:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for x in range(self.node_count):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components) <= 1


# ---------------------------------------------------------------------------
# construction and validation


def build_topological(
    graph: AbstractGraph,
    edge_crossings: Sequence[Sequence[int]],
    rotation: Mapping[int, Sequence] | Sequence[Sequence],
    outer: Optional[tuple[int, int, int]] = None,
    crossings: Optional[Sequence[tuple[int, int]]] = None,
    metadata: Optional[dict] = None,
    canonical: bool = True,
) -> TopologicalDrawing:
    """Validate a planarization and return it, canonically renumbered.

    ``edge_crossings[e]`` lists crossing ids along e from u to v. Crossing ids
    are arbitrary hashables unless ``crossings`` is given, in which case they
    index it. Rotation entries at real vertices may be bare edge ids.
    """
    n = graph.n
    ids: list = []
    where: dict = {}
    for e, cs in enumerate(edge_crossings):
        seen_here = set()
        for c in cs:
            if c in seen_here:
                raise SelfCrossing(f"edge {e} passes crossing {c} twice")
            seen_here.add(c)
            if c not in where:
                where[c] = []
                ids.append(c)
            where[c].append(e)
    if len(edge_crossings) != graph.m:
        raise RotationInconsistent("edge_crossings length differs from edge count")
    pairs = {}
    for c in ids:
        es = where[c]
        if len(es) == 1:
            raise SelfCrossing(f"crossing {c} lies on edge {es[0]} only")
        if len(es) != 2:
            raise RotationInconsistent(f"crossing {c} is shared by {len(es)} edges")
        e, f = sorted(es)
        if crossings is not None and tuple(sorted(crossings[c])) != (e, f):
            raise RotationInconsistent(f"crossing {c} declared as {crossings[c]} but lies on {(e, f)}")
        if graph.adjacent(e, f):
            raise AdjacentEdgesCross(f"edges {e} and {f} share an endpoint but cross")
        if (e, f) in pairs:
            raise EdgePairCrossesTwice(f"edges {e} and {f} cross more than once")
        pairs[(e, f)] = c
    # canonical dummy numbering: by edge pair
    order = sorted(pairs) if canonical else [tuple(sorted(where[c])) for c in ids]
    newid = {pairs[p]: k for k, p in enumerate(order)}
    ec = tuple(tuple(newid[c] for c in cs) for cs in edge_crossings)
    cr = tuple(order)
    # rotations
    if isinstance(rotation, Mapping):
        rot_in = rotation
        keys = list(rotation.keys())
    else:
        rot_in = dict(enumerate(rotation))
        keys = list(range(len(rotation)))
    node_of_old = {x: x for x in range(n)}
    for c, k in newid.items():
        node_of_old[("c", c)] = n + k

    def resolve(key) -> int:
        if isinstance(key, int) and 0 <= key < n:
            return key
        if isinstance(key, tuple) and len(key) == 2 and key[0] == "c" and key in node_of_old:
            return node_of_old[key]
        if isinstance(key, int) and crossings is not None and key - n in newid:
            return n + newid[key - n]
        raise RotationInconsistent(f"rotation given for unknown node {key!r}")

    rot: list[Optional[tuple[End, ...]]] = [None] * (n + len(cr))
    for key in keys:
        x = resolve(key)
        ends = []
        for ent in rot_in[key]:
            if isinstance(ent, int):
                if x >= n:
                    raise RotationInconsistent(f"bare edge id at crossing node {key!r}")
                e = ent
                if not 0 <= e < graph.m or x not in graph.edges[e]:
                    raise RotationInconsistent(f"edge {e} not incident to vertex {x}")
                d = 1 if graph.edges[e][0] == x else 0
                ends.append((e, d))
            else:
                e, d = int(ent[0]), int(ent[1])
                ends.append((e, d))
        rot[x] = tuple(ends)
    for x in range(len(rot)):
        if rot[x] is None:
            rot[x] = ()
    rot_t = tuple(_rotate_min(r) for r in rot) if canonical else tuple(rot)  # type: ignore[arg-type]
    d = TopologicalDrawing(graph, cr, ec, rot_t, None, dict(metadata or {}))
    _check_rotation(d)
    if outer is not None:
        ox, oe, od = outer
        try:
            h = d.half_edge(resolve(ox), (int(oe), int(od)))
        except (ValueError, IndexError) as exc:
            raise RotationInconsistent(f"outer face selector {outer!r} names no half-edge") from exc
        outer = _canonical_outer(d, d.face_of(h))
    d = TopologicalDrawing(graph, cr, ec, rot_t, outer, dict(metadata or {}))
    validate(d)
    return d


def _rotate_min(r: Sequence[End]) -> tuple[End, ...]:
    if not r:
        return tuple(r)
    i = min(range(len(r)), key=lambda k: r[k])
    return tuple(r[i:]) + tuple(r[:i])


def _canonical_outer(d: TopologicalDrawing, fid: int) -> tuple[int, int, int]:
    return min((d.he_origin(h),) + d.he_end(h) for h in d.faces()[fid])


def _check_rotation(d: TopologicalDrawing) -> None:
    g = d.graph
    expected: list[list[End]] = [[] for _ in range(d.node_count)]
    for e in range(g.m):
        p = d.path_nodes(e)
        for i, x in enumerate(p):
            if i > 0:
                expected[x].append((e, 0))
            if i < len(p) - 1:
                expected[x].append((e, 1))
    for x in range(d.node_count):
        got = list(d.rotation[x])
        if sorted(got) != sorted(expected[x]):
            raise RotationInconsistent(f"rotation at node {x} is {got}, expected ends {sorted(expected[x])}")
        if x >= g.n:
            if len(got) != 4:
                raise RotationInconsistent(f"crossing node {x} has degree {len(got)}")
            es = [t[0] for t in got]
            if not (es[0] == es[2] and es[1] == es[3] and es[0] != es[1]):
                raise RotationInconsistent(f"crossing node {x} does not alternate its two edges: {got}")
            if got[0][1] == got[2][1] or got[1][1] == got[3][1]:
                raise RotationInconsistent(f"crossing node {x}: an edge does not pass through")


def validate(d: TopologicalDrawing) -> None:
    """Re-check every drawing-model invariant; raise on the first violation."""
    g = d.graph
    seen_pairs = set()
    for k, (e, f) in enumerate(d.crossings):
        if e == f:
            raise SelfCrossing(f"crossing {k} pairs edge {e} with itself")
        if g.adjacent(e, f):
            raise AdjacentEdgesCross(f"edges {e} and {f} share an endpoint but cross")
        if (e, f) in seen_pairs:
            raise EdgePairCrossesTwice(f"edges {e} and {f} cross more than once")
        seen_pairs.add((e, f))
        if k not in d.edge_crossings[e] or k not in d.edge_crossings[f]:
            raise RotationInconsistent(f"crossing {k} missing from an edge path")
    for e, cs in enumerate(d.edge_crossings):
        if len(set(cs)) != len(cs):
            raise SelfCrossing(f"edge {e} visits a crossing twice")
        for k in cs:
            if e not in d.crossings[k]:
                raise RotationInconsistent(f"edge {e} lists crossing {k} that does not involve it")
    _check_rotation(d)
    try:
        d.faces()
    except RotationInconsistent:
        raise
    check_euler(d)
    check_homotopy(d)
    if not d.is_connected():
        log.debug("drawing has %d components", len(d.components))


def check_euler(d: TopologicalDrawing) -> None:
    comp_of = {}
    for ci, comp in enumerate(d.components):
        for x in comp:
            comp_of[x] = ci
    V = [len(c) for c in d.components]
    E = [0] * len(V)
    F = [0] * len(V)
    for _, _, a, _ in d._seg_info:
        E[comp_of[a]] += 1
    for walk in d.faces():
        F[comp_of[d.he_origin(walk[0])]] += 1
    for ci in range(len(V)):
        if E[ci] == 0:
            F[ci] = 1
        if V[ci] - E[ci] + F[ci] != 2:
            raise EulerViolation(
                f"component {ci}: V={V[ci]} E={E[ci]} F={F[ci]} (V-E+F must be 2)"
            )


def _node_adjacency(d: TopologicalDrawing) -> dict[int, set[int]]:
    adj = d.__dict__.get("_node_adj")
    if adj is None:
        adj = {}
        for _, _, a, b in d._seg_info:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        d.__dict__["_node_adj"] = adj
    return adj


def _side_seeds(d: TopologicalDrawing, cycle: list[int]) -> tuple[set[int], dict[int, int], set[int], set[int]]:
    """Nodes on a closed walk, the side (0 left / 1 right) of each half-edge leaving it, and the seeds per side."""
    org, rot_he, rot_pos = d._origins, d._rot_he, d._rot_pos
    on_cycle = {org[h] for h in cycle}
    left_seeds, right_seeds = set(), set()
    he_side: dict[int, int] = {}
    for i in range(len(cycle)):
        h_in, h_out = cycle[i - 1], cycle[i]
        rot = rot_he[org[h_out]]
        r = len(rot)
        a, b = rot_pos[h_out], rot_pos[h_in ^ 1]
        j = (a + 1) % r
        while j != b:
            he_side[rot[j]] = 0
            j = (j + 1) % r
        j = (b + 1) % r
        while j != a:
            he_side[rot[j]] = 1
            j = (j + 1) % r
    for h, side in he_side.items():
        y = org[h ^ 1]
        if y not in on_cycle:
            (left_seeds if side == 0 else right_seeds).add(y)
    return on_cycle, he_side, left_seeds, right_seeds


def _cycle_sides(d: TopologicalDrawing, cycle: list[int]) -> tuple[set[int], set[int], Optional[int]]:
    """Split the nodes off a closed walk of half-edges into its left/right sides.

    Returns (left nodes, right nodes, side of the outer face: 0 left / 1 right / None).
    Components of the planarization that do not touch the cycle are reported
    on the outer side when that side is known.
    """
    on_cycle, he_side, left_seeds, right_seeds = _side_seeds(d, cycle)
    cycle_set = set(cycle)
    adj = _node_adjacency(d)

    def flood(seeds: set[int]) -> set[int]:
        out, stack = set(seeds), list(seeds)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in on_cycle and y not in out:
                    out.add(y)
                    stack.append(y)
        return out

    left, right = flood(left_seeds), flood(right_seeds)
    outer_side = None
    if d.outer is not None:
        fo = d.outer_face_id
        for h in d.faces()[fo]:
            if h in cycle_set:
                outer_side = 0
                break
            if (h ^ 1) in cycle_set:
                outer_side = 1
                break
            if h in he_side:
                outer_side = he_side[h]
                break
            x = d.he_origin(h)
            if x in left:
                outer_side = 0
                break
            if x in right:
                outer_side = 1
                break
        if outer_side is not None:
            rest = set(range(d.node_count)) - on_cycle - left - right
            (left if outer_side == 0 else right).update(rest)
    return left, right, outer_side


def check_homotopy(d: TopologicalDrawing) -> None:
    g = d.graph
    for cls in g.parallel_classes():
        for i in range(len(cls)):
            for j in range(i + 1, len(cls)):
                e, f = cls[i], cls[j]
                if not _non_homotopic(d, e, f):
                    raise HomotopicMultiedge(f"parallel edges {e} and {f} bound an empty region")


def _non_homotopic(d: TopologicalDrawing, e: int, f: int) -> bool:
    g = d.graph
    u, v = g.edges[e]
    cyc = _edge_walk(d, e, u) + _edge_walk(d, f, v)
    on_cycle, _, left_seeds, right_seeds = _side_seeds(d, cyc)
    if _reaches_real(d, left_seeds, on_cycle) and _reaches_real(d, right_seeds, on_cycle):
        return True
    left, right, _ = _cycle_sides(d, cyc)
    real = lambda s: any(x < g.n for x in s)
    return real(left) and real(right)


def _reaches_real(d: TopologicalDrawing, seeds: set[int], blocked: set[int]) -> bool:
    """Flood from seeds avoiding ``blocked``; stop at the first real vertex."""
    adj = _node_adjacency(d)
    n = d.graph.n
    out, stack = set(seeds), list(seeds)
    while stack:
        x = stack.pop()
        if x < n:
            return True
        for y in adj.get(x, ()):
            if y not in blocked and y not in out:
                out.add(y)
                stack.append(y)
    return False


def _edge_walk(d: TopologicalDrawing, e: int, start: int) -> list[int]:
    off = d._seg_offset[e]
    k = len(d.edge_crossings[e]) + 1
    if d.graph.edges[e][0] == start:
        return [2 * (off + i) for i in range(k)]
    return [2 * (off + i) + 1 for i in reversed(range(k))]


def edge_walk(d: TopologicalDrawing, e: int, start: int) -> list[int]:
    """Half-edges of edge e in order, starting at its endpoint ``start``."""
    return _edge_walk(d, e, start)


def crossings_per_edge(d: TopologicalDrawing) -> dict[int, int]:
    return d.crossings_per_edge()


def faces(d: TopologicalDrawing) -> list[list[int]]:
    return d.faces()


def plane_drawing_from_rotation(
    graph: AbstractGraph, rotation: Sequence[Sequence[int]], outer: Optional[tuple[int, int, int]] = None, **kw
) -> TopologicalDrawing:
    return build_topological(graph, [[] for _ in range(graph.m)], rotation, outer, **kw)


def with_metadata(d: TopologicalDrawing, **meta) -> TopologicalDrawing:
    md = dict(d.metadata)
    md.update(meta)
    return TopologicalDrawing(d.graph, d.crossings, d.edge_crossings, d.rotation, d.outer, md)


def iter_ends(d: TopologicalDrawing) -> Iterable[tuple[int, End]]:
    for x, rot in enumerate(d.rotation):
        for end in rot:
            yield x, end
