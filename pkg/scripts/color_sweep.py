#!/usr/bin/env python3
"""Sweep chord counts and report colour usage, stage maxima and recursion depth.

Example:
    python scripts/color_sweep.py --max-n 30 --per-n 200 --csv sweep.csv
"""
import argparse
import csv
import statistics
import sys
import time

from chordcolor.driver import color_with_trace
from chordcolor.generate import generate
from chordcolor.oracle import colors_used

FIELDS = ["n", "instances", "mean_colors", "max_colors", "max_lemma2", "max_lemma1", "max_triangle_free", "max_depth", "ms_per_instance"]


def sweep_row(n: int, per_n: int, check: bool, seed_base: int) -> dict:
    used, depth = [], 0
    stage = {"lemma2": 0, "lemma1": 0, "triangle_free": 0}
    start = time.perf_counter()
    for i in range(per_n):
        coloring, trace = color_with_trace(generate(n, "k4-free", seed_base + 1000 * n + i), check_hypotheses=check)
        used.append(colors_used(coloring))
        for s in stage:
            stage[s] = max(stage[s], trace.max_colors(s))
        depth = max([depth] + [r["depth"] for r in trace.of("lemma3")])
    elapsed = time.perf_counter() - start
    return {
        "n": n,
        "instances": per_n,
        "mean_colors": round(statistics.fmean(used), 3),
        "max_colors": max(used),
        "max_lemma2": stage["lemma2"],
        "max_lemma1": stage["lemma1"],
        "max_triangle_free": stage["triangle_free"],
        "max_depth": depth,
        "ms_per_instance": round(1000 * elapsed / per_n, 3),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--per-n", type=int, default=100)
    parser.add_argument("--seed-base", type=int, default=0)
    parser.add_argument("--check-hypotheses", action="store_true")
    parser.add_argument("--csv", help="also write the table to this file")
    args = parser.parse_args(argv)

    rows = [sweep_row(n, args.per_n, args.check_hypotheses, args.seed_base) for n in range(args.min_n, args.max_n + 1)]
    writer = csv.DictWriter(sys.stdout, FIELDS, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            out = csv.DictWriter(fh, FIELDS)
            out.writeheader()
            out.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
