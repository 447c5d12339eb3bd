"""Regenerate the drawing files under tests/data from the constructions."""
from __future__ import annotations

import argparse
from pathlib import Path

from bipdense import gen_2planar, gen_8sticks_fixture, gen_fan, gen_ic, gen_nic, gen_rac, write_drawing

FIXTURES = {
    "rac-k2.json": lambda: gen_rac(2),
    "fan-k2_multi-8.json": lambda: gen_fan("k2_multi", 8),
    "fan-k55e.json": lambda: gen_fan("k55e", 10),
    "ic-16.json": lambda: gen_ic(16),
    "nic-12.json": lambda: gen_nic(12),
    "2planar-16.json": lambda: gen_2planar(16),
    "2planar-16-multi.json": lambda: gen_2planar(16, True),
    "8sticks.json": gen_8sticks_fixture,
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "data"))
    out = Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in FIXTURES.items():
        (out / name).write_text(write_drawing(make()), encoding="utf-8")
        print(out / name)


if __name__ == "__main__":
    main()
