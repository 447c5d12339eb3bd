"""Bipartite beyond-planar graph drawings: model, checkers, constructions, analysis and bounds."""
from .analysis import (
    analyze,
    check_stick_properties,
    classify_parts,
    dependency_graph,
    detect_motifs,
    eliminate_8_sticks,
    fan_charging,
    find_8_sticks,
    planar_structure,
)
from .bounds import BoundsReport, cr_lower_bound, kplanar_density_bound, max_edges, verify_drawing
from .checkers import (
    FamilyVerdict,
    check_family,
    is_fan_planar,
    is_ic_planar,
    is_k_planar,
    is_nic_planar,
    is_quasi_planar,
    is_rac,
)
from .drawing import TopologicalDrawing, build_topological, crossings_per_edge, faces
from .generators import (
    gen_2planar,
    gen_3planar,
    gen_8sticks_fixture,
    gen_cylinder,
    gen_fan,
    gen_ic,
    gen_nic,
    gen_rac,
)
from .geometry import GeometricDrawing, new_geometric, planarize_geometric
from .graph import AbstractGraph, Part, is_bipartite_consistent, new_graph
from .io import parse_drawing, write_drawing
from .svg import SvgOptions, export_svg

__all__ = [
    "AbstractGraph",
    "BoundsReport",
    "FamilyVerdict",
    "GeometricDrawing",
    "Part",
    "SvgOptions",
    "TopologicalDrawing",
    "analyze",
    "build_topological",
    "check_family",
    "check_stick_properties",
    "classify_parts",
    "cr_lower_bound",
    "crossings_per_edge",
    "dependency_graph",
    "detect_motifs",
    "eliminate_8_sticks",
    "export_svg",
    "faces",
    "fan_charging",
    "find_8_sticks",
    "gen_2planar",
    "gen_3planar",
    "gen_8sticks_fixture",
    "gen_cylinder",
    "gen_fan",
    "gen_ic",
    "gen_nic",
    "gen_rac",
    "is_bipartite_consistent",
    "is_fan_planar",
    "is_ic_planar",
    "is_k_planar",
    "is_nic_planar",
    "is_quasi_planar",
    "is_rac",
    "kplanar_density_bound",
    "max_edges",
    "new_geometric",
    "new_graph",
    "parse_drawing",
    "planar_structure",
    "planarize_geometric",
    "verify_drawing",
    "write_drawing",
]
