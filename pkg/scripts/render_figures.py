"""Render SVG pictures of the constructions, with the planar structure emphasized."""
from __future__ import annotations

import argparse
from pathlib import Path

from bipdense import (
    SvgOptions,
    analyze,
    export_svg,
    gen_2planar,
    gen_3planar,
    gen_8sticks_fixture,
    gen_fan,
    gen_ic,
    gen_nic,
    gen_rac,
    planarize_geometric,
)

FIGURES = {
    "ic-16": lambda: gen_ic(16),
    "nic-16": lambda: gen_nic(16),
    "rac-k3": lambda: gen_rac(3),
    "fan-k4-10": lambda: gen_fan("k4", 10),
    "fan-k55e": lambda: gen_fan("k55e", 10),
    "fan-k2_multi-8": lambda: gen_fan("k2_multi", 8),
    "2planar-16": lambda: gen_2planar(16),
    "3planar-5": lambda: gen_3planar(5),
    "8sticks": gen_8sticks_fixture,
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    ap.add_argument("--size", type=float, default=800.0)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in FIGURES.items():
        d = make()
        td = planarize_geometric(d) if hasattr(d, "coords") else d
        fa = analyze(td, "exact")
        (out / f"{name}.svg").write_text(export_svg(d, SvgOptions(analysis=fa, size=args.size)), encoding="utf-8")
        print(f"{out / name}.svg  n={d.n} m={d.m} |G_p|={len(fa.structure.selected)}")


if __name__ == "__main__":
    main()
