"""Mutable planarization used to construct drawings edge by edge.

Edges are added by *routing*: a new edge leaves its first endpoint through a
face corner, crosses a prescribed sequence of existing edges, and must end at
a corner of its second endpoint. Among all face sequences realizing the
crossing list the first one found by a deterministic depth-first search is
used; callers that care about the exact route pass a ``prefer`` callback.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .drawing import TopologicalDrawing, build_topological
from .errors import RoutingError
from .graph import AbstractGraph, Part


@dataclass
class Builder:
    partition: list[Part] = field(default_factory=list)
    edges: list[Optional[tuple[int, int]]] = field(default_factory=list)
    multigraph: bool = False
    # planarization state
    node_vertex: list[Optional[int]] = field(default_factory=list)  # node -> real vertex id or None (dummy)
    vertex_node: list[int] = field(default_factory=list)
    seg_edge: list[Optional[int]] = field(default_factory=list)
    seg_nodes: list[list[int]] = field(default_factory=list)
    rot: list[list[int]] = field(default_factory=list)
    edge_segs: list[list[int]] = field(default_factory=list)
    dummy_alive: dict[int, bool] = field(default_factory=dict)
    outer_he: Optional[int] = None
    isolated_face: dict[int, int] = field(default_factory=dict)  # node -> half-edge of its face
    metadata: dict = field(default_factory=dict)

    # ---- construction primitives ------------------------------------------
    def add_vertex(self, part: Part | str) -> int:
        part = Part(part)
        self.partition.append(part)
        node = len(self.node_vertex)
        self.node_vertex.append(len(self.vertex_node))
        self.vertex_node.append(node)
        self.rot.append([])
        return len(self.vertex_node) - 1

    def _new_node(self) -> int:
        self.node_vertex.append(None)
        self.rot.append([])
        node = len(self.node_vertex) - 1
        self.dummy_alive[node] = True
        return node

    def _new_seg(self, e: int, a: int, b: int) -> int:
        self.seg_edge.append(e)
        self.seg_nodes.append([a, b])
        return len(self.seg_edge) - 1

    def origin(self, h: int) -> int:
        return self.seg_nodes[h >> 1][h & 1]

    def dest(self, h: int) -> int:
        return self.seg_nodes[h >> 1][1 - (h & 1)]

    def he_edge(self, h: int) -> int:
        return self.seg_edge[h >> 1]  # type: ignore[return-value]

    def add_plane_edge(self, u: int, v: int, after_u: Optional[int], after_v: Optional[int]) -> int:
        """Add an uncrossed edge, inserting it ccw-after the given half-edges."""
        e = len(self.edges)
        self.edges.append((u, v))
        nu, nv = self.vertex_node[u], self.vertex_node[v]
        s = self._new_seg(e, nu, nv)
        self.edge_segs.append([s])
        self._insert(nu, 2 * s, after_u)
        self._insert(nv, 2 * s + 1, after_v)
        return e

    def set_rotation(self, u: int, order: Sequence[int]) -> None:
        """Set the ccw rotation of real vertex u from a list of its edge ids."""
        node = self.vertex_node[u]
        hs = []
        for e in order:
            segs = self.edge_segs[e]
            if self.seg_nodes[segs[0]][0] == node:
                hs.append(2 * segs[0])
            elif self.seg_nodes[segs[-1]][1] == node:
                hs.append(2 * segs[-1] + 1)
            else:
                raise RoutingError(f"edge {e} not incident to {u}")
        self.rot[node] = hs

    def add_abstract_edge(self, u: int, v: int) -> int:
        """Add an edge with no rotation placement; call set_rotation afterwards."""
        e = len(self.edges)
        self.edges.append((u, v))
        s = self._new_seg(e, self.vertex_node[u], self.vertex_node[v])
        self.edge_segs.append([s])
        return e

    def _insert(self, node: int, h: int, after: Optional[int]) -> None:
        r = self.rot[node]
        if after is None:
            if r:
                raise RoutingError("insertion point required at non-isolated node")
            r.append(h)
            self.isolated_face.pop(node, None)
            return
        i = r.index(after)
        r.insert(i + 1, h)

    # ---- faces ---------------------------------------------------------------
    def he_next(self, h: int) -> int:
        t = h ^ 1
        r = self.rot[self.origin(t)]
        return r[r.index(t) - 1]

    def rot_succ(self, h: int) -> int:
        r = self.rot[self.origin(h)]
        return r[(r.index(h) + 1) % len(r)]

    def compute_faces(self) -> tuple[list[list[int]], dict[int, int]]:
        face_of: dict[int, int] = {}
        faces: list[list[int]] = []
        # he_next(h) is the rotation predecessor of twin(h)
        pred: dict[int, int] = {}
        for r in self.rot:
            for i, t in enumerate(r):
                pred[t] = r[i - 1]
        for s, e in enumerate(self.seg_edge):
            if e is None:
                continue
            for h in (2 * s, 2 * s + 1):
                if h in face_of:
                    continue
                walk, cur = [], h
                while cur not in face_of:
                    face_of[cur] = len(faces)
                    walk.append(cur)
                    cur = pred[cur ^ 1]
                faces.append(walk)
        return faces, face_of

    # ---- routing -------------------------------------------------------------
    def route(
        self,
        u: int,
        v: int,
        via: Sequence[int] = (),
        prefer: Optional[Callable[[list[int]], bool]] = None,
    ) -> int:
        """Add edge (u, v) crossing the edges ``via`` in this order.

        ``prefer`` may reject candidate face sequences (list of face ids, with
        the face ids of the current face table); the first accepted plan wins.
        """
        for plan in self.route_plans(u, v, via):
            if prefer is None or prefer(plan[1]):
                return self.commit_plan(u, v, plan)
        raise RoutingError(f"no route from {u} to {v} crossing {list(via)}")

    def route_plans(self, u: int, v: int, via: Sequence[int] = ()) -> Iterator[tuple]:
        """Yield every plan (start corner, face sequence, crossed half-edges, end corner)."""
        if len(set(via)) != len(via):
            raise RoutingError("an edge may be crossed only once")
        for g in via:
            if self.edges[g] is None or set(self.edges[g]) & {u, v}:
                raise RoutingError(f"cannot cross edge {g} from ({u},{v})")
        faces, face_of = self.compute_faces()
        nu, nv = self.vertex_node[u], self.vertex_node[v]

        def corners(node: int) -> list[tuple[int, Optional[int]]]:
            if not self.rot[node]:
                h = self.isolated_face.get(node)
                if h is None:
                    return [(0, None)] if not faces else []
                return [(face_of[h], None)]
            return [(face_of[h], h) for h in self.rot[node]]

        end_corners: dict[int, list[Optional[int]]] = {}
        for f, h in corners(nv):
            end_corners.setdefault(f, []).append(h)

        def dfs(i: int, f: int, seq: list[int], crossed: list[int]) -> Iterator[tuple[list[int], list[int], Optional[int]]]:
            if i == len(via):
                for h in end_corners.get(f, []):
                    yield list(seq), list(crossed), h
                return
            for b in faces[f]:
                if self.seg_edge[b >> 1] != via[i]:
                    continue
                g = face_of[b ^ 1]
                if g in seq:
                    continue
                seq.append(g)
                crossed.append(b)
                yield from dfs(i + 1, g, seq, crossed)
                seq.pop()
                crossed.pop()

        for f0, h0 in corners(nu):
            for seq, crossed, end_h in dfs(0, f0, [f0], []):
                yield h0, seq, crossed, end_h

    def commit_plan(self, u: int, v: int, plan: tuple) -> int:
        start, _, crossed, end_h = plan
        return self._commit(u, v, start, crossed, end_h)

    def _commit(self, u: int, v: int, start: Optional[int], crossed: list[int], end_h: Optional[int]) -> int:
        e = len(self.edges)
        self.edges.append((u, v))
        nu, nv = self.vertex_node[u], self.vertex_node[v]
        dummies = []
        for b in crossed:
            dummies.append(self._split(b))
        chain = [nu] + [d for d, _, _ in dummies] + [nv]
        segs = [self._new_seg(e, chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        self.edge_segs.append(segs)
        self._insert(nu, 2 * segs[0], start)
        for i, (d, toward_head, toward_tail) in enumerate(dummies):
            back = 2 * segs[i] + 1
            fwd = 2 * segs[i + 1]
            self.rot[d] = [toward_head, back, toward_tail, fwd]
        self._insert(nv, 2 * segs[-1] + 1, end_h)
        return e

    def _split(self, h: int) -> tuple[int, int, int]:
        """Split the segment of h at a new dummy; return (dummy, ends toward h's head / tail)."""
        s = h >> 1
        a, b = self.seg_nodes[s]
        e = self.seg_edge[s]
        d = self._new_node()
        s2 = self._new_seg(e, d, b)  # type: ignore[arg-type]
        self.seg_nodes[s][1] = d
        rb = self.rot[b]
        rb[rb.index(2 * s + 1)] = 2 * s2 + 1
        segs = self.edge_segs[e]  # type: ignore[index]
        segs.insert(segs.index(s) + 1, s2)
        if self.outer_he == 2 * s + 1:
            self.outer_he = 2 * s2 + 1
        if h % 2 == 0:
            return d, 2 * s2, 2 * s + 1
        return d, 2 * s + 1, 2 * s2

    # ---- removal ---------------------------------------------------------------
    def remove_edge(self, e: int) -> None:
        segs = self.edge_segs[e]
        u, v = self.edges[e]  # type: ignore[misc]
        nu, nv = self.vertex_node[u], self.vertex_node[v]
        if self.outer_he is not None and self.seg_edge[self.outer_he >> 1] == e:
            self.outer_he = self.he_next(self.outer_he)
            if self.seg_edge[self.outer_he >> 1] == e:
                self.outer_he = None
        self.rot[nu].remove(2 * segs[0])
        self.rot[nv].remove(2 * segs[-1] + 1)
        for s in segs[:-1]:
            d = self.seg_nodes[s][1]
            self._merge_at(d, e)
        for s in segs:
            self.seg_edge[s] = None
        self.edges[e] = None
        self.edge_segs[e] = []

    def _merge_at(self, d: int, removed: int) -> None:
        hs = [h for h in self.rot[d] if self.seg_edge[h >> 1] != removed]
        # hs = the other edge's two half-edges at d: one tail-ward (odd), one head-ward (even)
        toward_tail = next(h for h in hs if h % 2 == 1)
        toward_head = next(h for h in hs if h % 2 == 0)
        s1, s2 = toward_tail >> 1, toward_head >> 1
        f = self.seg_edge[s1]
        b = self.seg_nodes[s2][1]
        self.seg_nodes[s1][1] = b
        rb = self.rot[b]
        rb[rb.index(2 * s2 + 1)] = 2 * s1 + 1
        if self.outer_he in (2 * s2, 2 * s2 + 1):
            self.outer_he = 2 * s1 + (self.outer_he & 1)
        self.seg_edge[s2] = None
        self.edge_segs[f].remove(s2)  # type: ignore[index]
        self.rot[d] = []
        self.dummy_alive[d] = False

    def place_vertex_in_face(self, part: Part | str, face_he: int) -> int:
        """Add an isolated vertex inside the face to the left of half-edge face_he."""
        x = self.add_vertex(part)
        self.isolated_face[self.vertex_node[x]] = face_he
        return x

    # ---- export ----------------------------------------------------------------
    def to_drawing(self, metadata: Optional[dict] = None, validate: bool = True) -> TopologicalDrawing:
        live = [i for i, e in enumerate(self.edges) if e is not None]
        eid = {old: k for k, old in enumerate(live)}
        graph = AbstractGraph(
            len(self.vertex_node), tuple(self.partition), tuple(self.edges[i] for i in live), self.multigraph  # type: ignore[misc]
        )
        dnodes = [x for x, alive in sorted(self.dummy_alive.items()) if alive]
        did = {x: k for k, x in enumerate(dnodes)}
        edge_crossings = []
        for old in live:
            segs = self.edge_segs[old]
            edge_crossings.append([did[self.seg_nodes[s][1]] for s in segs[:-1]])

        def end_of(h: int) -> tuple[int, int]:
            return (eid[self.seg_edge[h >> 1]], 1 if h % 2 == 0 else 0)  # type: ignore[index]

        rotation: dict = {}
        for node, r in enumerate(self.rot):
            vx = self.node_vertex[node]
            if vx is not None:
                rotation[vx] = [end_of(h) for h in r]
            elif self.dummy_alive.get(node):
                rotation[("c", did[node])] = [end_of(h) for h in r]
        outer = None
        if self.outer_he is not None and self.seg_edge[self.outer_he >> 1] is not None:
            node = self.origin(self.outer_he)
            vx = self.node_vertex[node]
            key = vx if vx is not None else ("c", did[node])
            outer = (key,) + end_of(self.outer_he)
        md = dict(self.metadata)
        md.update(metadata or {})
        return build_topological(graph, edge_crossings, rotation, outer, metadata=md)  # type: ignore[arg-type]

    @classmethod
    def from_drawing(cls, d: TopologicalDrawing) -> "Builder":
        b = cls(multigraph=d.graph.multigraph_allowed)
        for p in d.graph.partition:
            b.add_vertex(p)
        for _ in d.crossings:
            b._new_node()
        # node ids coincide with the drawing's planarization node ids
        for e, (u, v) in enumerate(d.graph.edges):
            b.edges.append((u, v))
            p = d.path_nodes(e)
            segs = [b._new_seg(e, p[i], p[i + 1]) for i in range(len(p) - 1)]
            b.edge_segs.append(segs)
        # segment numbering coincides with the drawing's
        b.rot = [list(rs) for rs in d._rot_he]
        if d.outer is not None:
            x, e, dd = d.outer
            b.outer_he = d.half_edge(x, (e, dd))
        b.metadata = dict(d.metadata)
        return b

    def find_edge(self, u: int, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e is not None and set(e) == {u, v}]

    def live_edges(self) -> Iterable[int]:
        return (i for i, e in enumerate(self.edges) if e is not None)
