"""Command-line driver: generate, check, analyze, bounds, crossing-bound, svg."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from .analysis import analyze, check_stick_properties, dependency_graph, find_8_sticks
from .bounds import cr_lower_bound, max_edges, normalize_family
from .checkers import check_family
from .drawing import TopologicalDrawing
from .errors import BipDenseError
from .generators import fan as fan_mod
from .generators.cylinder import gen_2planar, gen_3planar, gen_cylinder, gen_ic, gen_nic
from .generators.fixtures import gen_8sticks_fixture
from .generators.rac import gen_rac
from .geometry import GeometricDrawing, planarize_geometric
from .io import load_drawing, write_drawing
from .svg import SvgOptions, export_svg

EXIT_OK, EXIT_NO, EXIT_BAD = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def _need(value: Optional[int], flag: str, family: str) -> int:
    if value is None:
        raise UsageError(f"{family} needs {flag}")
    return value


def _gen_rac(a) -> GeometricDrawing:
    n = _need(a.n, "--n", "rac")
    if n % 6:
        raise UsageError("rac needs n divisible by 6")
    return gen_rac(n // 6)


def _gen_fan(a) -> TopologicalDrawing:
    variant = a.variant or "k4"
    if a.multigraph and not variant.endswith("_multi"):
        variant += "_multi"
    if variant == "k2":
        variant = "k2_multi"
    return fan_mod.gen_fan(variant, _need(a.n, "--n", "fan"))


GENERATORS: dict[str, Callable] = {
    "ic": lambda a: gen_ic(_need(a.n, "--n", "ic")),
    "nic": lambda a: gen_nic(_need(a.n, "--n", "nic")),
    "rac": _gen_rac,
    "fan": _gen_fan,
    "2-planar": lambda a: gen_2planar(_need(a.n, "--n", "2-planar"), a.multigraph),
    "3-planar": lambda a: gen_3planar(_need(a.columns, "--columns", "3-planar")),
    "cylinder": lambda a: gen_cylinder(_need(a.columns, "--columns", "cylinder")),
    "8sticks": lambda a: gen_8sticks_fixture(),
}
_GEN_ALIASES = {"ic-planar": "ic", "nic-planar": "nic", "2planar": "2-planar", "3planar": "3-planar",
                "fan-planar": "fan", "8-sticks": "8sticks"}


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_generate(a) -> int:
    fam = a.family.lower()
    fam = _GEN_ALIASES.get(fam, fam)
    if fam not in GENERATORS:
        raise UsageError(f"unknown family {a.family!r}; expected one of {sorted(GENERATORS)}")
    _emit(write_drawing(GENERATORS[fam](a)), a.output)
    return EXIT_OK


def _check_name(family: str, k: Optional[int]) -> tuple[str, Optional[int]]:
    f = family.lower()
    if f in ("k-planar", "kplanar", "quasi-planar", "k-quasi-planar"):
        return f, k
    if k is not None:
        raise UsageError(f"-k applies to k-planar and quasi-planar only, not {family}")
    return f, None


def cmd_check(a) -> int:
    fam, k = _check_name(a.family, a.k)
    d = load_drawing(a.file)
    v = check_family(d, fam, k)
    if v.holds:
        print(f"{v.family}: yes")
        return EXIT_OK
    print(f"{v.family}: no")
    print(f"witness: {v.witness!r}; {v.reason}", file=sys.stderr)
    return EXIT_NO


def analysis_report(d, exact: bool) -> dict:
    td = planarize_geometric(d) if isinstance(d, GeometricDrawing) else d
    fa = analyze(td, "exact" if exact else "greedy")
    H = dependency_graph(fa)
    props = check_stick_properties(fa, H)
    kinds: dict[str, int] = {}
    for mt in fa.motifs:
        kinds[mt.kind] = kinds.get(mt.kind, 0) + 1
    return {
        "n": td.n,
        "m": td.m,
        "crossings": td.crossing_count,
        "mode": fa.structure.mode,
        "planar_structure_edges": len(fa.structure.selected),
        "faces": fa.face_count,
        "h": fa.h_values,
        "sticks": len(fa.sticks),
        "middle_parts": len(fa.middle_parts),
        "motifs": dict(sorted(kinds.items())),
        "dependency_edges": [[de.source, de.target] for de in H.edges],
        "properties": props.summary(),
        "eight_sticks": len(find_8_sticks(fa)),
    }


def cmd_analyze(a) -> int:
    rep = analysis_report(load_drawing(a.file), a.exact_gp)
    _emit(json.dumps(rep, sort_keys=True, indent=1) + "\n", a.report)
    return EXIT_OK


def cmd_bounds(a) -> int:
    normalize_family(a.family)
    print(max_edges(a.family, a.n, a.bipartite, a.kind))
    return EXIT_OK


def cmd_crossing_bound(a) -> int:
    print(cr_lower_bound(a.n, a.m))
    return EXIT_OK


def cmd_svg(a) -> int:
    d = load_drawing(a.file)
    fa = None
    if a.overlay_analysis:
        td = planarize_geometric(d) if isinstance(d, GeometricDrawing) else d
        fa = analyze(td, "exact" if a.exact_gp else "greedy")
    _emit(export_svg(d, SvgOptions(mark_crossings=not a.no_crossings, analysis=fa)), a.output)
    return EXIT_OK


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bipdense", description="Bipartite beyond-planar drawings: generate, check, analyze, bound.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a construction as bpd-drawing/1 JSON")
    g.add_argument("family", help="ic, nic, rac, fan, 2-planar, 3-planar, cylinder, 8sticks")
    g.add_argument("--n", type=_nonneg)
    g.add_argument("--columns", type=_nonneg)
    g.add_argument("--multigraph", action="store_true")
    g.add_argument("--variant", choices=[v for v in fan_mod.VARIANTS] + ["k2"], help="fan variant")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="exit 0 if the drawing is in the family, 1 if not")
    c.add_argument("family", help="ic, nic, 1-planar, 2-planar, 3-planar, k-planar, fan, quasi-planar, rac")
    c.add_argument("-k", type=_nonneg)
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    an = sub.add_parser("analyze", help="planar structure, sticks, motifs, dependency graph")
    an.add_argument("file")
    an.add_argument("--exact-gp", action="store_true", help="maximum planar structure instead of greedy")
    an.add_argument("--report")
    an.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="edge-density bound for a family")
    b.add_argument("family")
    b.add_argument("--n", type=_nonneg, required=True)
    b.add_argument("--bipartite", action="store_true")
    b.add_argument("--kind", choices=("upper", "lower"), default="upper")
    b.set_defaults(func=cmd_bounds)

    cb = sub.add_parser("crossing-bound", help="crossing-number lower bound for bipartite graphs")
    cb.add_argument("--n", type=_nonneg, required=True)
    cb.add_argument("--m", type=_nonneg, required=True)
    cb.set_defaults(func=cmd_crossing_bound)

    s = sub.add_parser("svg", help="render a drawing as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--overlay-analysis", action="store_true")
    s.add_argument("--exact-gp", action="store_true")
    s.add_argument("--no-crossings", action="store_true")
    s.set_defaults(func=cmd_svg)
    return p


def cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return args.func(args)
    except UsageError as exc:
        print(f"bipdense: {exc}", file=sys.stderr)
        return EXIT_BAD
    except (BipDenseError, OSError, ValueError, TypeError) as exc:
        print(f"bipdense: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD


def main() -> None:
    sys.exit(cli())
