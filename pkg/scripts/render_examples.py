#!/usr/bin/env python3
"""Write a few generated diagrams, their colourings and SVG drawings to a directory."""
import argparse
import sys
from pathlib import Path

from chordcolor import color_circle_graph
from chordcolor.docformat import emit_diagram
from chordcolor.generate import generate
from chordcolor.render import render_svg


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--sizes", default="6,12,20,30", help="comma-separated chord counts")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--mode", default="k4-free")
    args = parser.parse_args(argv)

    args.outdir.mkdir(parents=True, exist_ok=True)
    for n in (int(t) for t in args.sizes.split(",")):
        d = generate(n, args.mode, args.seed)
        coloring = color_circle_graph(d)
        stem = args.outdir / f"{args.mode}-n{n}-s{args.seed}"
        stem.with_suffix(".txt").write_text(emit_diagram(d, coloring))
        stem.with_suffix(".svg").write_text(render_svg(d, coloring))
        print(f"{stem.name}: {len(set(coloring.values()))} colours")
    return 0


if __name__ == "__main__":
    sys.exit(main())
