#!/usr/bin/env python3
"""Write DOT and JSON lattices for every shipped fixture model.

Usage:
    python scripts/render_fixture_lattices.py [--out DIR]
"""

import argparse
import sys
from pathlib import Path

from giideals import build_lattice, enumerate_t_families, export_dot, export_json
from giideals import fixtures


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="lattices")
    args = parser.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    named = {
        "shift2": fixtures.shift2(),
        "absorb2": fixtures.absorb2(),
        "loop1": fixtures.loop1(),
        "loops2": fixtures.loops2(),
        "funnel1": fixtures.funnel1(),
        "funnel2": fixtures.funnel2(),
    }
    for name, model in named.items():
        lat = build_lattice(model, enumerate_t_families(model))
        (out / f"{name}.dot").write_text(export_dot(lat))
        (out / f"{name}.json").write_text(export_json(lat))
        print(
            f"{name}: {len(lat.nodes)} families, {len(lat.cover_edges)} cover edges "
            f"-> {out / name}.dot/.json",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
