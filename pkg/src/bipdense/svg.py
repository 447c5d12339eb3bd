"""SVG export for geometric and topological drawings."""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Optional, Union

import networkx as nx

from .analysis import FaceAnalysis
from .drawing import TopologicalDrawing
from .errors import LayoutFailure
from .geometry import GeometricDrawing

PART_COLORS = {"A": "#d62728", "B": "#1f77b4"}


@dataclass(frozen=True)
class SvgOptions:
    mark_crossings: bool = True
    analysis: Optional[FaceAnalysis] = None  # emphasize G_p edges of this analysis
    size: float = 800.0
    margin: float = 20.0
    vertex_radius: float = 5.0


def _fit(points: dict, opts: SvgOptions) -> dict:
    """Map raw float positions into the viewport, y pointing up."""
    if not points:
        return {}
    xs = [p[0] for p in points.values()]
    ys = [p[1] for p in points.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (opts.size - 2 * opts.margin) / span
    x0, y1 = min(xs), max(ys)
    return {key: (opts.margin + (x - x0) * k, opts.margin + (y1 - y) * k) for key, (x, y) in points.items()}


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _planar_layout(d: TopologicalDrawing) -> dict:
    """Straight-line positions for planarization nodes and one bend per segment."""
    emb = nx.PlanarEmbedding()
    for x in range(d.node_count):
        emb.add_node(x)
    for s in range(d.segment_count):
        emb.add_node(("s", s))
    for x, rot in enumerate(d._rot_he):
        prev = None
        for h in rot:
            mid = ("s", h >> 1)
            if prev is None:
                emb.add_half_edge(x, mid)
            else:
                emb.add_half_edge(x, mid, ccw=prev)
            prev = mid
    for s, (_, _, a, b) in enumerate(d._seg_info):
        mid = ("s", s)
        emb.add_half_edge(mid, a)
        emb.add_half_edge(mid, b, ccw=a)
    pos: dict = {}
    offset = 0.0
    for comp in sorted(nx.connected_components(emb.to_undirected()), key=lambda c: min(str(v) for v in c)):
        sub = emb.subgraph(comp).copy()
        sub_emb = nx.PlanarEmbedding(sub)
        try:
            sub_emb.check_structure()
            if len(comp) < 3:
                local = {v: (float(i), 0.0) for i, v in enumerate(sorted(comp, key=str))}
            else:
                local = {v: (float(p[0]), float(p[1])) for v, p in nx.combinatorial_embedding_to_pos(sub_emb).items()}
        except (nx.NetworkXException, ValueError, KeyError) as exc:
            raise LayoutFailure(f"planar layout failed: {exc}") from exc
        width = max(p[0] for p in local.values())
        for v, (x, y) in local.items():
            pos[v] = (x + offset, y)
        offset += width + 2.0
    return pos


def _root(opts: SvgOptions) -> ET.Element:
    return ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": _fmt(opts.size),
            "height": _fmt(opts.size),
            "viewBox": f"0 0 {_fmt(opts.size)} {_fmt(opts.size)}",
        },
    )


def _segment_attrs(e: int, emphasized: frozenset[int]) -> dict:
    gp = e in emphasized
    return {
        "class": "segment gp" if gp else "segment",
        "data-edge": str(e),
        "stroke": "#000000" if gp else "#888888",
        "stroke-width": "2.5" if gp else "1",
        "fill": "none",
    }


def _vertices(root: ET.Element, d, pos: dict, opts: SvgOptions) -> None:
    for x in range(d.n):
        part = d.graph.partition[x].value
        cx, cy = pos[x]
        ET.SubElement(
            root,
            "circle",
            {"class": f"vertex part-{part}", "data-vertex": str(x), "cx": _fmt(cx), "cy": _fmt(cy),
             "r": _fmt(opts.vertex_radius), "fill": PART_COLORS[part]},
        )


def _crossing_mark(root: ET.Element, k: int, p: tuple[float, float], opts: SvgOptions) -> None:
    r = opts.vertex_radius * 0.6
    ET.SubElement(
        root,
        "rect",
        {"class": "crossing", "data-crossing": str(k), "x": _fmt(p[0] - r), "y": _fmt(p[1] - r),
         "width": _fmt(2 * r), "height": _fmt(2 * r), "fill": "#2ca02c"},
    )


def export_svg(d: Union[GeometricDrawing, TopologicalDrawing], options: Optional[SvgOptions] = None) -> str:
    """Render a drawing.

    Geometric drawings get one line per edge; topological drawings get one
    polyline per planarization segment, bent at an auxiliary point.
    """
    opts = options or SvgOptions()
    emphasized = frozenset(opts.analysis.structure.selected) if opts.analysis is not None else frozenset()
    root = _root(opts)
    if isinstance(d, GeometricDrawing):
        pts = {x: (float(p[0]), float(p[1])) for x, p in enumerate(d.coords)}
        inter = d.intersections
        for k, (_, (pt, _, _)) in enumerate(sorted(inter.items())):
            pts[("c", k)] = (float(pt[0]), float(pt[1]))
        pos = _fit(pts, opts)
        for e, (u, v) in enumerate(d.graph.edges):
            attrs = _segment_attrs(e, emphasized)
            attrs.update({"x1": _fmt(pos[u][0]), "y1": _fmt(pos[u][1]), "x2": _fmt(pos[v][0]), "y2": _fmt(pos[v][1])})
            ET.SubElement(root, "line", attrs)
        if opts.mark_crossings:
            for k in range(len(inter)):
                _crossing_mark(root, k, pos[("c", k)], opts)
    else:
        pos = _fit(_planar_layout(d), opts)
        for s, (e, _, a, b) in enumerate(d._seg_info):
            pts = [pos[a], pos[("s", s)], pos[b]]
            attrs = _segment_attrs(e, emphasized)
            attrs["points"] = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            ET.SubElement(root, "polyline", attrs)
        if opts.mark_crossings:
            for k in range(d.crossing_count):
                _crossing_mark(root, k, pos[d.dummy_node(k)], opts)
    _vertices(root, d, pos, opts)
    return ET.tostring(root, encoding="unicode") + "\n"
