"""The "bpd-drawing/1" JSON interchange format."""
from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Union

from .drawing import TopologicalDrawing, build_topological
from .errors import BipDenseError, DrawingSyntaxError, SchemaError, ValidationError
from .geometry import GeometricDrawing, new_geometric, planarize_geometric
from .graph import new_graph

FORMAT = "bpd-drawing/1"
Drawing = Union[TopologicalDrawing, GeometricDrawing]


def _jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return str(Fraction(x))
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def drawing_to_dict(d: Drawing) -> dict:
    g = d.graph
    verts = []
    for i in range(g.n):
        v: dict[str, Any] = {"id": i, "part": g.partition[i].value}
        if isinstance(d, GeometricDrawing):
            v["x"], v["y"] = str(d.coords[i][0]), str(d.coords[i][1])
        verts.append(v)
    out: dict[str, Any] = {
        "format": FORMAT,
        "bipartite": g.bipartite,
        "multigraph": g.multigraph_allowed,
        "vertices": verts,
        "edges": [{"id": e, "u": u, "v": v} for e, (u, v) in enumerate(g.edges)],
        "metadata": _jsonable(d.metadata),
    }
    if isinstance(d, TopologicalDrawing):
        out["crossings"] = [{"id": k, "edges": list(p)} for k, p in enumerate(d.crossings)]
        out["edge_crossings"] = [list(cs) for cs in d.edge_crossings]
        out["rotations"] = [[list(end) for end in r] for r in d.rotation]
        out["outer_face"] = list(d.outer) if d.outer is not None else None
    return out


def write_drawing(d: Drawing) -> str:
    """Canonical text: sorted keys, dense ids, reduced rationals, trailing newline."""
    return json.dumps(drawing_to_dict(d), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


# ---- parsing ----------------------------------------------------------------


def _req(obj: dict, key: str, typ, where: str):
    if key not in obj:
        raise SchemaError(f"{where}.{key}" if where else key, "missing")
    val = obj[key]
    if typ is int and isinstance(val, bool):
        raise SchemaError(f"{where}.{key}" if where else key, "expected integer")
    if not isinstance(val, typ):
        raise SchemaError(f"{where}.{key}" if where else key, f"expected {getattr(typ, '__name__', typ)}")
    return val


def _rational(val: Any, field: str) -> Fraction:
    if isinstance(val, bool):
        raise SchemaError(field, "expected rational")
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        try:
            return Fraction(val)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(field, f"not an exact rational: {val!r}") from None
    raise SchemaError(field, "expected rational string 'p/q'")


def _int_list(val: Any, field: str, length: int | None = None) -> list[int]:
    if not isinstance(val, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in val):
        raise SchemaError(field, "expected list of integers")
    if length is not None and len(val) != length:
        raise SchemaError(field, f"expected {length} entries")
    return val


def parse_drawing(text: Union[str, bytes]) -> Drawing:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DrawingSyntaxError(f"invalid UTF-8: {exc.reason}", 1, exc.start + 1) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DrawingSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise SchemaError("<root>", "expected object")
    fmt = _req(obj, "format", str, "")
    if fmt != FORMAT:
        raise SchemaError("format", f"unsupported format {fmt!r}")
    bipartite = obj.get("bipartite", True)
    multigraph = obj.get("multigraph", False)
    if not isinstance(bipartite, bool) or not isinstance(multigraph, bool):
        raise SchemaError("bipartite", "expected boolean flags")
    verts = _req(obj, "vertices", list, "")
    parts, coords = [], []
    for i, v in enumerate(verts):
        where = f"vertices[{i}]"
        if not isinstance(v, dict):
            raise SchemaError(where, "expected object")
        if _req(v, "id", int, where) != i:
            raise SchemaError(f"{where}.id", "ids must be dense and ordered")
        part = _req(v, "part", str, where)
        if part not in ("A", "B"):
            raise SchemaError(f"{where}.part", "expected 'A' or 'B'")
        parts.append(part)
        if "x" in v or "y" in v:
            coords.append((_rational(v.get("x"), f"{where}.x"), _rational(v.get("y"), f"{where}.y")))
    if coords and len(coords) != len(verts):
        raise SchemaError("vertices", "coordinates must be given for all vertices or none")
    edges = []
    for i, e in enumerate(_req(obj, "edges", list, "")):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            raise SchemaError(where, "expected object")
        if _req(e, "id", int, where) != i:
            raise SchemaError(f"{where}.id", "ids must be dense and ordered")
        edges.append((_req(e, "u", int, where), _req(e, "v", int, where)))
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SchemaError("metadata", "expected object")
    topo_keys = [k for k in ("crossings", "edge_crossings", "rotations") if k in obj]
    if topo_keys and len(topo_keys) != 3:
        raise SchemaError(topo_keys[0], "crossings, edge_crossings and rotations go together")
    if not coords and not topo_keys:
        raise SchemaError("vertices", "need coordinates or a planarization")
    try:
        graph = new_graph(len(parts), parts, edges, multigraph_allowed=multigraph, bipartite=bipartite)
        geo = new_geometric(graph, coords, metadata) if coords else None
        if not topo_keys:
            return geo  # type: ignore[return-value]
        topo = _parse_topological(obj, graph, metadata)
    except BipDenseError as exc:
        if isinstance(exc, (SchemaError, DrawingSyntaxError)):
            raise
        raise ValidationError(exc) from exc
    if geo is not None:
        if _shape(planarize_geometric(geo)) != _shape(topo):
            raise ValidationError(_Mismatch("coordinates and planarization disagree"))
        return geo
    return topo


class _Mismatch(BipDenseError):
    pass


def _shape(d: TopologicalDrawing) -> tuple:
    return (d.crossings, d.edge_crossings, d.rotation, d.outer)


def _parse_topological(obj: dict, graph, metadata: dict) -> TopologicalDrawing:
    crs = _req(obj, "crossings", list, "")
    pairs = []
    for i, c in enumerate(crs):
        where = f"crossings[{i}]"
        if not isinstance(c, dict):
            raise SchemaError(where, "expected object")
        if _req(c, "id", int, where) != i:
            raise SchemaError(f"{where}.id", "ids must be dense and ordered")
        pairs.append(tuple(_int_list(c.get("edges"), f"{where}.edges", 2)))
    ec_raw = _req(obj, "edge_crossings", list, "")
    if len(ec_raw) != graph.m:
        raise SchemaError("edge_crossings", f"expected one list per edge ({graph.m})")
    ec = [_int_list(cs, f"edge_crossings[{e}]") for e, cs in enumerate(ec_raw)]
    for e, cs in enumerate(ec):
        for c in cs:
            if not 0 <= c < len(pairs):
                raise SchemaError(f"edge_crossings[{e}]", f"unknown crossing id {c}")
    rots_raw = _req(obj, "rotations", list, "")
    if len(rots_raw) != graph.n + len(pairs):
        raise SchemaError("rotations", "expected one rotation per planarization node")
    rotation = {}
    for x, r in enumerate(rots_raw):
        if not isinstance(r, list):
            raise SchemaError(f"rotations[{x}]", "expected list")
        rotation[x] = [tuple(_int_list(end, f"rotations[{x}]", 2)) for end in r]
    outer = obj.get("outer_face")
    if outer is not None:
        outer = tuple(_int_list(outer, "outer_face", 3))
    return build_topological(graph, ec, rotation, outer, crossings=pairs, metadata=metadata)  # type: ignore[arg-type]


def load_drawing(path: str) -> Drawing:
    with open(path, "rb") as fh:
        return parse_drawing(fh.read())


def save_drawing(d: Drawing, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_drawing(d))
