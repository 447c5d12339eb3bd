"""Planar structure, sticks, motifs and the dependency graph of a drawing."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional

from .checkers import common_endpoint, is_k_planar
from .drawing import TopologicalDrawing
from .errors import ConfigurationStale, ExactModeTooLarge, NotFanPlanar
from .graph import Part

EXACT_BUDGET = 64


def drawing_fingerprint(d: TopologicalDrawing) -> str:
    payload = repr((d.graph, d.crossings, d.edge_crossings, d.rotation, d.outer))
    return hashlib.sha256(payload.encode()).hexdigest()


# ---------------------------------------------------------------------------
# maximum independent sets in the crossing-conflict graph


def _components(mask: int, adj: list[int]) -> list[int]:
    comps = []
    while mask:
        low = mask & -mask
        comp, frontier = low, low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            nb = adj[b.bit_length() - 1] & mask & ~comp
            comp |= nb
            frontier |= nb
        comps.append(comp)
        mask &= ~comp
    return comps


class _MIS:
    """Exact maximum independent set size by memoized branching over bitmasks."""

    def __init__(self, adj: list[int]):
        self.adj = adj
        self.memo: dict[int, int] = {0: 0}

    def alpha(self, mask: int) -> int:
        r = self.memo.get(mask)
        if r is not None:
            return r
        comps = _components(mask, self.adj)
        if len(comps) > 1:
            r = sum(self._alpha_conn(c) for c in comps)
        else:
            r = self._alpha_conn(mask)
        self.memo[mask] = r
        return r

    def _alpha_conn(self, mask: int) -> int:
        r = self.memo.get(mask)
        if r is not None:
            return r
        adj = self.adj
        best_v, best_d, all_le2 = -1, -1, True
        m = mask
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            deg = bin(adj[v] & mask).count("1")
            if deg <= 1:
                r = 1 + self.alpha(mask & ~(b | adj[v]))
                self.memo[mask] = r
                return r
            if deg > 2:
                all_le2 = False
            if deg > best_d:
                best_v, best_d = v, deg
        if all_le2:
            # connected, every degree 2: a cycle
            r = bin(mask).count("1") // 2
        else:
            b = 1 << best_v
            r = max(self.alpha(mask & ~b), 1 + self.alpha(mask & ~(b | adj[best_v])))
        self.memo[mask] = r
        return r


def _lex_first_maximum(nodes: list[int], conflicts: dict[int, set[int]]) -> list[int]:
    idx = {x: i for i, x in enumerate(nodes)}
    adj = [0] * len(nodes)
    for x in nodes:
        for y in conflicts[x]:
            if y in idx:
                adj[idx[x]] |= 1 << idx[y]
    mis = _MIS(adj)
    mask = (1 << len(nodes)) - 1
    target = mis.alpha(mask)
    chosen = []
    for i, x in enumerate(nodes):
        b = 1 << i
        if not mask & b:
            continue
        rest = mask & ~(b | adj[i])
        if 1 + mis.alpha(rest) == target:
            chosen.append(x)
            mask = rest
            target -= 1
        else:
            mask &= ~b
    return chosen


# ---------------------------------------------------------------------------
# planar structure


@dataclass(frozen=True)
class PlanarStructure:
    drawing: TopologicalDrawing
    selected: tuple[int, ...]
    mode: str

    @cached_property
    def selected_set(self) -> frozenset[int]:
        return frozenset(self.selected)

    @cached_property
    def _rot(self) -> list[list[tuple[int, int]]]:
        d, sel = self.drawing, self.selected_set
        return [[end for end in d.rotation[x] if end[0] in sel] for x in range(d.n)]

    def _next(self, e: int, dr: int) -> tuple[int, int]:
        """Next directed edge (e, dir) of the face left of directed edge e (dir 1 = u->v)."""
        u, v = self.drawing.graph.edges[e]
        y = v if dr == 1 else u
        twin = (e, 0 if dr == 1 else 1)  # end of e at y
        rot = self._rot[y]
        i = rot.index(twin)
        pe, pd = rot[i - 1]
        return (pe, pd)

    @cached_property
    def _face_data(self) -> tuple[list[list[tuple[int, int]]], dict[tuple[int, int], int]]:
        face_of: dict[tuple[int, int], int] = {}
        faces: list[list[tuple[int, int]]] = []
        for e in self.selected:
            for dr in (1, 0):
                if (e, dr) in face_of:
                    continue
                walk, cur = [], (e, dr)
                while cur not in face_of:
                    face_of[cur] = len(faces)
                    walk.append(cur)
                    cur = self._next(*cur)
                faces.append(walk)
        return faces, face_of

    @property
    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as cyclic walks of directed selected edges (e, dir), interior on the left."""
        return self._face_data[0]

    def face_of_directed(self, e: int, dr: int) -> int:
        return self._face_data[1][(e, dr)]

    def face_vertices(self, f: int) -> list[int]:
        g = self.drawing.graph
        return [g.edges[e][0] if dr == 1 else g.edges[e][1] for e, dr in self.faces[f]]

    def face_length(self, f: int) -> int:
        return len(self.faces[f])

    @cached_property
    def _region_face(self) -> dict[int, int]:
        """Original face id -> face of the planar structure containing it."""
        d, sel = self.drawing, self.selected_set
        parent = list(range(len(d.faces())))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for h in range(0, 2 * d.segment_count, 2):
            if d.he_edge(h) not in sel:
                a, b = find(d.face_of(h)), find(d.face_of(h + 1))
                if a != b:
                    parent[a] = b
        label: dict[int, int] = {}
        for h in range(2 * d.segment_count):
            e = d.he_edge(h)
            if e in sel:
                dr = 1 if h % 2 == 0 else 0
                label.setdefault(find(d.face_of(h)), self.face_of_directed(e, dr))
        return {F: label.get(find(F), -1) for F in range(len(d.faces()))}

    def region_face(self, original_face: int) -> int:
        return self._region_face[original_face]

    @cached_property
    def outer_face(self) -> Optional[int]:
        of = self.drawing.outer_face_id
        if of is None:
            return None
        return self._region_face[of]

    def is_quadrangulation(self) -> bool:
        return bool(self.faces) and all(len(w) == 4 for w in self.faces) and self._connected()

    def _connected(self) -> bool:
        d = self.drawing
        parent = list(range(d.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.selected:
            u, v = d.graph.edges[e]
            parent[find(u)] = find(v)
        return len({find(x) for x in range(d.n)}) == 1

    def is_maximal(self) -> bool:
        sel = self.selected_set
        return all(e in sel or any(f in sel for f in self.drawing.crossing_edges(e)) for e in range(self.drawing.m))

    def degree(self, x: int) -> int:
        return len(self._rot[x])


def conflict_graph(d: TopologicalDrawing) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {e: set() for e in range(d.m)}
    for e, f in d.crossings:
        adj[e].add(f)
        adj[f].add(e)
    return adj


def planar_structure(d: TopologicalDrawing, mode: str = "exact", budget: int = EXACT_BUDGET) -> PlanarStructure:
    adj = conflict_graph(d)
    if mode == "greedy":
        chosen: set[int] = set()
        for e in sorted(range(d.m), key=lambda e: (len(adj[e]), e)):
            if not adj[e] & chosen:
                chosen.add(e)
        return PlanarStructure(d, tuple(sorted(chosen)), "greedy")
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    chosen = {e for e in range(d.m) if not adj[e]}
    seen: set[int] = set(chosen)
    for e in range(d.m):
        if e in seen:
            continue
        comp, stack = [], [e]
        seen.add(e)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(comp) > budget:
            raise ExactModeTooLarge(f"conflict component with {len(comp)} edges exceeds budget {budget}")
        chosen.update(_lex_first_maximum(sorted(comp), adj))
    return PlanarStructure(d, tuple(sorted(chosen)), "exact")


def brute_force_max_plane(d: TopologicalDrawing) -> int:
    """Largest crossing-free edge subset by plain enumeration (small m only)."""
    pairs = [(e, f) for e, f in d.crossings]
    best = 0
    for mask in range(1 << d.m):
        if bin(mask).count("1") <= best:
            continue
        if all(not (mask >> e & 1 and mask >> f & 1) for e, f in pairs):
            best = bin(mask).count("1")
    return best


# ---------------------------------------------------------------------------
# sticks and middle-parts


@dataclass(frozen=True)
class Stick:
    id: int
    edge: int
    owner: int
    face: int
    corner: int  # index of owner in the face walk
    terminal: int  # selected edge where the stick ends
    terminal_side: int  # index of the terminal edge in the face walk
    dummies: frozenset[int]  # crossings with unselected edges along the stick
    short: bool


@dataclass(frozen=True)
class MiddlePart:
    edge: int
    face: int
    crossed: tuple[int, int]
    sides: tuple[int, int]


@dataclass(frozen=True)
class Motif:
    kind: str  # scissor | twin | pseudo-scissor
    face: int
    sticks: tuple[int, int]
    neighbors: tuple[int, int]


@dataclass
class FaceAnalysis:
    structure: PlanarStructure
    sticks: list[Stick]
    middle_parts: list[MiddlePart]
    edge_sticks: dict[int, tuple[int, int]]  # edge -> (stick at u, stick at v)
    unsupported: list[int] = field(default_factory=list)  # unselected edges with no selected crossing
    mixed_middle: list[int] = field(default_factory=list)  # edges whose middle part also meets unselected edges
    motifs: list[Motif] = field(default_factory=list)
    motifs_detected: bool = False

    @property
    def drawing(self) -> TopologicalDrawing:
        return self.structure.drawing

    @cached_property
    def face_count(self) -> int:
        return len(self.structure.faces)

    def h(self, f: int) -> int:
        return self._h[f]

    @cached_property
    def _h(self) -> list[int]:
        out = [0] * self.face_count
        for s in self.sticks:
            out[s.face] += 1
        return out

    @property
    def h_values(self) -> list[int]:
        return list(self._h)

    def sticks_in(self, f: int) -> list[Stick]:
        return [s for s in self.sticks if s.face == f]

    def middles_in(self, f: int) -> list[MiddlePart]:
        return [mp for mp in self.middle_parts if mp.face == f]

    def other_stick(self, s: Stick) -> Stick:
        a, b = self.edge_sticks[s.edge]
        return self.sticks[b if a == s.id else a]

    def motifs_in(self, f: int, kinds: tuple[str, ...] = ("scissor", "twin", "pseudo-scissor")) -> list[Motif]:
        return [mt for mt in self.motifs if mt.face == f and mt.kind in kinds]


def _side_index(ps: PlanarStructure, f: int, e: int, dr: int) -> int:
    return ps.faces[f].index((e, dr))


def classify_parts(ps: PlanarStructure) -> FaceAnalysis:
    d = ps.drawing
    sel = ps.selected_set
    sticks: list[Stick] = []
    middles: list[MiddlePart] = []
    edge_sticks: dict[int, tuple[int, int]] = {}
    unsupported: list[int] = []
    mixed: list[int] = []
    for e in range(d.m):
        if e in sel:
            continue
        cross = d.crossing_edges(e)
        cids = d.edge_crossings[e]
        pos = [i for i, f in enumerate(cross) if f in sel]
        if not pos:
            unsupported.append(e)
            continue
        off = d._seg_offset[e]
        u, v = d.graph.edges[e]
        ids = []
        for owner, seg, k, others in (
            (u, off, pos[0], cids[: pos[0]]),
            (v, off + len(cids), pos[-1], cids[pos[-1] + 1 :]),
        ):
            h_out = 2 * seg if owner == u else 2 * seg + 1
            f = ps.region_face(d.face_of(h_out))
            corner = _corner_index(ps, f, owner, h_out)
            g = cross[k]
            side = _terminal_side(ps, d, cids[k], e, g, toward_u=(owner == u))
            ln = ps.face_length(f)
            short = side in ((corner + 1) % ln, (corner - 2) % ln)
            st = Stick(len(sticks), e, owner, f, corner, g, side, frozenset(others), short)
            sticks.append(st)
            ids.append(st.id)
        edge_sticks[e] = (ids[0], ids[1])
        for a, b in zip(pos, pos[1:]):
            seg = off + a + 1
            f = ps.region_face(d.face_of(2 * seg))
            s1 = _terminal_side(ps, d, cids[a], e, cross[a], toward_u=False)
            s2 = _terminal_side(ps, d, cids[b], e, cross[b], toward_u=True)
            middles.append(MiddlePart(e, f, (cross[a], cross[b]), (s1, s2)))
            if b > a + 1:
                mixed.append(e)
    return FaceAnalysis(ps, sticks, middles, edge_sticks, unsupported, sorted(set(mixed)))


def _corner_index(ps: PlanarStructure, f: int, owner: int, h_out: int) -> int:
    """Position of owner in the walk of f at the corner the half-edge leaves through."""
    d = ps.drawing
    rot = d.rotation[owner]
    end = d.he_end(h_out)
    i = rot.index(end)
    sel = ps.selected_set
    for k in range(1, len(rot) + 1):
        pe, pd = rot[(i - k) % len(rot)]
        if pe in sel:
            dr = pd  # end (pe, 1) leaves u(pe) toward v(pe): directed u->v
            return _side_index(ps, f, pe, dr)
    return -1


def _terminal_side(ps: PlanarStructure, d: TopologicalDrawing, cid: int, e: int, g: int, toward_u: bool) -> int:
    """Walk index of the side of g facing the part of e on the u-side (or v-side) of the crossing."""
    x = d.dummy_node(cid)
    rot = list(d.rotation[x])
    back = (e, 0) if toward_u else (e, 1)
    i = rot.index(back)
    g_end = rot[(i + 1) % 4]
    assert g_end[0] == g
    dr = 1 - g_end[1]
    f = ps.face_of_directed(g, dr)
    return _side_index(ps, f, g, dr)


# ---------------------------------------------------------------------------
# motifs


def detect_motifs(fa: FaceAnalysis) -> FaceAnalysis:
    d = fa.drawing
    motifs: list[Motif] = []
    by_face: dict[int, list[Stick]] = {}
    for s in fa.sticks:
        by_face.setdefault(s.face, []).append(s)
    for f, group in sorted(by_face.items()):
        ln = fa.structure.face_length(f)
        for s, t in combinations(group, 2):
            nb = (fa.other_stick(s).face, fa.other_stick(t).face)
            if s.owner == t.owner and s.corner == t.corner:
                if s.terminal_side == t.terminal_side:
                    motifs.append(Motif("twin", f, (s.id, t.id), nb))
                continue
            c = d.crossing_of(s.edge, t.edge)
            if c is None or c not in s.dummies or c not in t.dummies:
                continue
            gap = (t.corner - s.corner) % ln
            kind = "pseudo-scissor" if gap in (1, ln - 1) else "scissor"
            motifs.append(Motif(kind, f, (s.id, t.id), nb))
    fa.motifs = motifs
    fa.motifs_detected = True
    return fa


def analyze(d: TopologicalDrawing, mode: str = "exact", budget: int = EXACT_BUDGET) -> FaceAnalysis:
    return detect_motifs(classify_parts(planar_structure(d, mode, budget)))


# ---------------------------------------------------------------------------
# dependency graph


@dataclass(frozen=True)
class DependencyEdge:
    source: int
    target: int
    motif: Motif


@dataclass
class DependencyGraph:
    nodes: list[int]
    edges: list[DependencyEdge]

    def out_degree(self, f: int) -> int:
        return sum(1 for e in self.edges if e.source == f)

    def in_degree(self, f: int) -> int:
        return sum(1 for e in self.edges if e.target == f)


def dependency_graph(fa: FaceAnalysis) -> DependencyGraph:
    if not fa.motifs_detected:
        detect_motifs(fa)
    out = []
    for mt in fa.motifs:
        if mt.kind == "pseudo-scissor":
            continue
        f1, f2 = mt.neighbors
        target = min((f1, f2), key=lambda g: (fa.h(g), g))
        out.append(DependencyEdge(mt.face, target, mt))
    return DependencyGraph(list(range(fa.face_count)), out)


# ---------------------------------------------------------------------------
# property diagnostics


@dataclass
class PropertyReport:
    checks: dict[str, list]  # statement -> list of violating faces / motifs
    h_counts: dict[int, int]
    faces_h2: int
    faces_h4: int
    stick_total: int
    edge_bound: Fraction
    eight_sticks_exceptions: list

    def holds(self, name: str) -> bool:
        return not self.checks[name]

    def summary(self) -> dict:
        return {
            "checks": {k: ("ok" if not v else [repr(x) for x in v]) for k, v in self.checks.items()},
            "h_counts": {str(k): v for k, v in sorted(self.h_counts.items())},
            "faces_h2": self.faces_h2,
            "faces_h4": self.faces_h4,
            "stick_total": self.stick_total,
            "edge_bound": str(self.edge_bound),
            "eight_sticks_exceptions": [repr(x) for x in self.eight_sticks_exceptions],
        }


def _extra_crossing_outside(fa: FaceAnalysis, s: Stick) -> bool:
    total = len(fa.drawing.edge_crossings[s.edge])
    return total - len(s.dummies) - 1 > 0


def check_stick_properties(fa: FaceAnalysis, H: Optional[DependencyGraph] = None) -> PropertyReport:
    if H is None:
        H = dependency_graph(fa)
    d = fa.drawing
    checks: dict[str, list] = {
        "quad-face": [],
        "four-sticks-need-motif": [],
        "pseudo-scissor": [],
        "2-face": [],
        "2-middle": [],
        "sticks-of-neighbours": [],
        "property-1": [],
        "property-2": [],
        "property-3": [],
    }
    exceptions = []
    # the four arm faces of each 8-sticks configuration; their twins into the
    # center see 8 neighbouring sticks, and the dependency-graph properties
    # are only claimed for drawings without such configurations
    arms = [frozenset((cfg.f, cfg.f1, cfg.f2, cfg.f_star)) for cfg in find_8_sticks(fa)]
    in_config = set().union(*arms) if arms else set()
    for f in range(fa.face_count):
        hf = fa.h(f)
        if hf > 4:
            checks["quad-face"].append(f)
        if hf == 4 and not fa.motifs_in(f, ("scissor", "twin")):
            checks["four-sticks-need-motif"].append(f)
        if fa.motifs_in(f, ("pseudo-scissor",)) and hf > 3:
            checks["pseudo-scissor"].append(f)
        group = fa.sticks_in(f)
        ln = fa.structure.face_length(f)
        for s, t in combinations(group, 2):
            if (t.corner - s.corner) % ln not in (1, ln - 1) or s.terminal_side != t.terminal_side:
                continue
            c = d.crossing_of(s.edge, t.edge)
            inside = c is not None and c in s.dummies and c in t.dummies
            if (inside or (_extra_crossing_outside(fa, s) and _extra_crossing_outside(fa, t))) and hf != 2:
                checks["2-face"].append(f)
                break
        mids = fa.middles_in(f)
        sides = [x for mp in mids for x in mp.sides]
        if len(sides) != len(set(sides)) and hf > 3:
            checks["2-middle"].append(f)
        if f in in_config:
            continue
        if hf == 4 and (H.out_degree(f) != 2 or H.in_degree(f) != 0):
            checks["property-1"].append(f)
        if hf == 3 and H.out_degree(f) < H.in_degree(f):
            checks["property-2"].append(f)
        if hf == 2 and H.in_degree(f) > 2:
            checks["property-3"].append(f)
    for mt in fa.motifs:
        if mt.kind == "pseudo-scissor":
            continue
        f1, f2 = mt.neighbors
        total = fa.h(f1) + fa.h(f2)
        if total > 7:
            if mt.kind == "twin" and any({mt.face, f1, f2} <= arm for arm in arms):
                exceptions.append(mt)
            else:
                checks["sticks-of-neighbours"].append(mt)
    counts: dict[int, int] = {}
    for f in range(fa.face_count):
        counts[fa.h(f)] = counts.get(fa.h(f), 0) + 1
    n = d.n
    return PropertyReport(
        checks,
        counts,
        counts.get(2, 0),
        counts.get(4, 0),
        len(fa.sticks),
        Fraction(2 * n - 4) + Fraction(3, 2) * (n - 2),
        exceptions,
    )


# ---------------------------------------------------------------------------
# 8-sticks configurations


@dataclass(frozen=True)
class EightSticks:
    twin: tuple[int, int]  # stick ids of the twin in f
    f: int
    f_center: int
    f1: int
    f2: int
    f_star: int
    a: tuple[int, ...]  # a_1..a_12, clockwise
    edges: tuple[int, int, int, int]  # (a3,a12), (a3,a6), (a12,a9), (a6,a9)
    fingerprint: str


def _through_center(fa: FaceAnalysis, e: int, center: int) -> Optional[MiddlePart]:
    for mp in fa.middle_parts:
        if mp.edge == e and mp.face == center:
            return mp
    return None


def find_8_sticks(fa: FaceAnalysis) -> list[EightSticks]:
    if not fa.motifs_detected:
        detect_motifs(fa)
    ps = fa.structure
    d = fa.drawing
    found: dict[int, EightSticks] = {}
    fp = drawing_fingerprint(d)
    for mt in fa.motifs:
        if mt.kind != "twin":
            continue
        s1, s2 = (fa.sticks[i] for i in mt.sticks)
        f = mt.face
        if ps.face_length(f) != 4:
            continue
        e_dir = ps.faces[f][s1.terminal_side]
        center = ps.face_of_directed(e_dir[0], 1 - e_dir[1])
        if center in found or center == f or ps.face_length(center) != 4:
            continue
        m1, m2 = _through_center(fa, s1.edge, center), _through_center(fa, s2.edge, center)
        if m1 is None or m2 is None:
            continue
        cw = ps.face_vertices(center)
        cwalk = ps.faces[center]
        j_e = cwalk.index((e_dir[0], 1 - e_dir[1]))
        # the other sides crossed must be the two sides adjacent to e, one each
        o1 = m1.sides[1] if m1.sides[0] == j_e else m1.sides[0]
        o2 = m2.sides[1] if m2.sides[0] == j_e else m2.sides[0]
        if {o1, o2} != {(j_e + 1) % 4, (j_e - 1) % 4}:
            continue
        # the walk of center runs ccw; clockwise labels from the corner next to the twin vertex
        w = s1.owner
        c0 = cw[j_e]  # walk edge j_e goes cw[j_e] -> cw[j_e+1]
        c1 = cw[(j_e + 1) % 4]
        fverts = ps.face_vertices(f)
        if w not in fverts:
            continue
        # a2 is the center corner adjacent to w on f
        k = fverts.index(w)
        nbrs = {fverts[(k + 1) % 4], fverts[(k - 1) % 4]}
        if c0 in nbrs:
            a2, a5 = c0, c1
        elif c1 in nbrs:
            a2, a5 = c1, c0
        else:
            continue
        # label in the configuration's own clockwise sense: a2 -> a5 -> a8 -> a11
        i2, i5 = cw.index(a2), cw.index(a5)
        step = i5 - i2
        a8, a11 = cw[(i5 + step) % 4], cw[(i5 + 2 * step) % 4]
        # edges through the center, identified by the sides they cross
        side_idx = {(cw[i], cw[(i + 1) % 4]): i for i in range(4)}

        def side(x: int, y: int) -> int:
            return side_idx[(x, y)] if (x, y) in side_idx else side_idx[(y, x)]

        s_25, s_58, s_811, s_112 = side(a2, a5), side(a5, a8), side(a8, a11), side(a11, a2)
        by_pair: dict[frozenset, list[MiddlePart]] = {}
        for mp in fa.middles_in(center):
            by_pair.setdefault(frozenset(mp.sides), []).append(mp)
        try:
            (me1,) = by_pair[frozenset((s_25, s_112))]
            (me2,) = by_pair[frozenset((s_25, s_58))]
            (me1p,) = by_pair[frozenset((s_112, s_811))]
            (me2p,) = by_pair[frozenset((s_58, s_811))]
        except (KeyError, ValueError):
            continue
        e1, e2, e1p, e2p = me1.edge, me2.edge, me1p.edge, me2p.edge
        if {e1, e2} != {s1.edge, s2.edge}:
            continue
        g = d.graph

        def other(e: int, x: int) -> int:
            return g.other_end(e, x)

        a3 = w
        if a3 not in g.edges[e1] or a3 not in g.edges[e2]:
            continue
        a12, a6 = other(e1, a3), other(e2, a3)
        if a12 not in g.edges[e1p] or a6 not in g.edges[e2p]:
            continue
        a9 = other(e1p, a12)
        if other(e2p, a6) != a9:
            continue
        f_a = f
        f_d = fa.other_stick(s1 if s1.edge == e1 else s2).face
        f_b = fa.other_stick(s2 if s2.edge == e2 else s1).face
        # f*: face across the a8-a11 side
        de, dd = cwalk[s_811]
        f_c = ps.face_of_directed(de, 1 - dd)
        if fa.h(f_d) + fa.h(f_b) != 8:
            continue

        def outer_pair(face: int, x: int, y: int) -> tuple[int, int]:
            fv = ps.face_vertices(face)
            i = fv.index(x)
            # walk of an arm face runs ccw: x -> p -> q -> y reversed gives clockwise x, q, p, y
            if fv[(i + 1) % 4] == y:
                return fv[(i + 3) % 4], fv[(i + 2) % 4]
            return fv[(i + 1) % 4], fv[(i + 2) % 4]

        a3_, a4 = outer_pair(f_a, a2, a5)
        a6_, a7 = outer_pair(f_b, a5, a8)
        a9_, a10 = outer_pair(f_c, a8, a11)
        a12_, a1 = outer_pair(f_d, a11, a2)
        if (a3_, a6_, a9_, a12_) != (a3, a6, a9, a12):
            continue
        a = (a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12)
        found[center] = EightSticks(mt.sticks, f_a, center, f_d, f_b, f_c, a, (e1, e2, e1p, e2p), fp)
    return [found[k] for k in sorted(found)]


def eliminate_8_sticks(d: TopologicalDrawing, cfg: EightSticks) -> TopologicalDrawing:
    from .builder import Builder

    if drawing_fingerprint(d) != cfg.fingerprint:
        raise ConfigurationStale("drawing changed since the configuration was detected")
    a = {i + 1: x for i, x in enumerate(cfg.a)}
    b = Builder.from_drawing(d)
    e1, _, _, e2p = cfg.edges
    b.remove_edge(e1)
    b.remove_edge(e2p)
    side = lambda x, y: b.find_edge(a[x], a[y])[0]
    part = Part.A if d.graph.partition[a[2]] is Part.B else Part.B
    # a face of the builder inside the center that touches both a2 and a8
    faces, face_of = b.compute_faces()
    n2, n8 = b.vertex_node[a[2]], b.vertex_node[a[8]]
    host = None
    for fid, walk in enumerate(faces):
        nodes = {b.origin(h) for h in walk}
        edges = {b.he_edge(h) for h in walk}
        if n2 in nodes and n8 in nodes and side(2, 5) in edges and side(8, 11) in edges:
            host = walk[0]
            break
    if host is None:
        raise ConfigurationStale("central face not found")
    v = b.place_vertex_in_face(part, host)
    b.route(a[2], v, [])
    b.route(a[8], v, [])
    _route_2planar(b, a[6], v, [side(5, 8)])
    _route_2planar(b, a[12], v, [side(2, 11)])
    _route_2planar(b, a[3], a[8], [side(2, 5)])
    _route_2planar(b, a[2], a[9], [side(8, 11)])
    return b.to_drawing({"eliminated_8_sticks": list(cfg.a)})


def _route_2planar(b, u: int, v: int, base: list[int], k: int = 2) -> int:
    """Route u-v crossing ``base`` plus possibly one more edge, keeping every edge at <= k crossings."""
    from .errors import RoutingError

    def crossings(e: int) -> int:
        return len(b.edge_segs[e]) - 1

    tries = [list(base)]
    extra = [e for e in b.live_edges() if crossings(e) < k and not set(b.edges[e]) & {u, v} and e not in base]
    for x in extra:
        for pos in range(len(base) + 1):
            tries.append(base[:pos] + [x] + base[pos:])
    for via in tries:
        if any(crossings(g) >= k for g in via):
            continue
        try:
            plans = list(b.route_plans(u, v, via))
        except RoutingError:
            continue
        for plan in plans:
            return b.commit_plan(u, v, plan)
    raise RoutingError(f"no 2-planar route for ({u},{v})")


# ---------------------------------------------------------------------------
# fan-planar charging


@dataclass
class ChargeReport:
    classification: dict[int, str]  # edge -> "A-edge" | "B-edge" | "planar-structure"
    charged_vertex: dict[int, int]
    charge: list[int]
    degree: list[int]
    slack: list[int]
    quadrangulation: bool
    claim2: Optional[dict[int, bool]]
    charging_crossings: list[tuple[int, int]]

    @property
    def total_charge(self) -> int:
        return sum(self.charge)


def fan_charging(d: TopologicalDrawing, ps: Optional[PlanarStructure] = None) -> ChargeReport:
    if ps is None:
        ps = planar_structure(d, "greedy")
    sel = ps.selected_set
    n = d.n
    cls: dict[int, str] = {}
    target: dict[int, int] = {}
    charge = [0] * n
    for e in range(d.m):
        if e in sel:
            cls[e] = "planar-structure"
            continue
        apex = common_endpoint(d, e)
        if apex is None:
            raise NotFanPlanar(f"edge {e} has no fan apex")
        cls[e] = "A-edge" if d.graph.partition[apex] is Part.A else "B-edge"
        target[e] = apex
        charge[apex] += 1
    degree = [ps.degree(x) for x in range(n)]
    slack = [degree[x] - charge[x] for x in range(n)]
    quad = ps.is_quadrangulation()
    claim2 = {x: slack[x] >= 2 for x in range(n)} if quad else None
    bad = []
    for x in range(n):
        es = [e for e, t in target.items() if t == x]
        for e, f in combinations(es, 2):
            if d.crossing_of(e, f) is not None:
                bad.append((e, f))
    return ChargeReport(cls, target, charge, degree, slack, quad, claim2, bad)
