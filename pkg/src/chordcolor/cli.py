"""Command-line entry point.

Exit codes: 0 ok, 1 usage error / failed lemma precondition / improper
colouring, 2 parse error, 3 K4 present, 4 exact-search size cap exceeded,
5 internal invariant failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .chords import Arc, build_graph
from .docformat import DiagramDocument, emit_document, parse_document
from .driver import ColoringConfig, color_circle_graph
from .errors import (
    ChordColorError,
    GenerationError,
    InvariantError,
    K4Error,
    ParseError,
    SizeLimitError,
    UsageError,
)
from .generate import MODES, GenSpec, gen
from .intervals import build_intervals, color_intervals, enumerate_arc, lemma1_color
from .oracle import DEFAULT_MAX_VERTICES, chromatic_number_exact, clique_number, colors_used, enumerate_triangles, find_violation
from .render import render_svg
from .trace import Trace
from .untangle import build_gaps, color_triangle_free, lemma2_color, prune_and_enumerate, untangle

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_K4, EXIT_SIZE, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5


def exit_code_for(err: Exception) -> int:
    if isinstance(err, ParseError):
        return EXIT_PARSE
    if isinstance(err, K4Error):
        return EXIT_K4
    if isinstance(err, SizeLimitError):
        return EXIT_SIZE
    if isinstance(err, InvariantError):
        return EXIT_INTERNAL
    return EXIT_USAGE


class Report:
    """Text lines plus a JSON mirror of the same facts."""

    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}
        self.code = EXIT_OK

    def add(self, key, value, text=None):
        self.data[key] = value
        self.lines.append(text if text is not None else f"{key}: {value}")

    def fail(self, err: ChordColorError):
        self.code = exit_code_for(err)
        self.data["error"] = {"type": type(err).__name__, "message": str(err), "exit_code": self.code}
        if isinstance(err, K4Error):
            self.data["error"]["witness"] = list(err.witness)
            self.lines.append(f"K4 witness: {' '.join(map(str, err.witness))}")
        self.lines.append(f"error: {err}")

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        return "\n".join(self.lines) + "\n"


def _read(path: str) -> DiagramDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None
    return parse_document(text)


def _ids(text: str | None) -> frozenset[int] | None:
    if text is None:
        return None
    try:
        return frozenset(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad chord id list {text!r}") from None


def _arc(text: str | None, num_slots: int) -> Arc | None:
    if text is None:
        return None
    try:
        start, length = (int(t) for t in text.split(":"))
    except ValueError:
        raise UsageError(f"arc must look like START:LENGTH, got {text!r}") from None
    return Arc(start, length, num_slots)


def _frame(doc: DiagramDocument, args) -> tuple[Arc, frozenset[int], frozenset[int]]:
    arc = _arc(args.arc, doc.diagram.num_slots) or doc.arc
    A = _ids(args.A) if args.A is not None else doc.A
    B = _ids(args.B) if args.B is not None else doc.B
    if arc is None or A is None or B is None:
        raise UsageError("need an arc and chord sets A and B (document blocks or --arc/--A/--B)")
    return arc, A, B


def _fmt_coloring(coloring: dict[int, int]) -> list[str]:
    return [f"chord {c}: {coloring[c]}" for c in sorted(coloring)]


def color_file(path: str, check: bool = False, emit: bool = False) -> Report:
    rep = Report()
    try:
        doc = _read(path)
        trace = Trace()
        coloring = color_circle_graph(doc.diagram, ColoringConfig(check, trace))
    except ChordColorError as err:
        if isinstance(err, K4Error):
            rep.add("k4_check", "failed", "k4_check: failed (graph contains K4)")
        rep.fail(err)
        return rep
    rep.add("k4_check", "passed", "k4_check: passed (omega <= 3)")
    rep.data["coloring"] = {str(c): v for c, v in coloring.items()}
    rep.lines.extend(_fmt_coloring(coloring))
    rep.add("colors_used", colors_used(coloring))
    rep.add("max_stage_colors", {s: trace.max_colors(s) for s in ("lemma1", "triangle_free", "lemma2")},
            "max_stage_colors: " + " ".join(f"{s}={trace.max_colors(s)}" for s in ("lemma1", "triangle_free", "lemma2")))
    rep.add("verified", find_violation(build_graph(doc.diagram), coloring) is None)
    if emit:
        rep.data["document"] = emit_document(DiagramDocument(doc.diagram, coloring))
        rep.lines = [rep.data["document"].rstrip("\n")]
    return rep


def _color_job(job):
    path, check, emit, as_json = job
    rep = color_file(path, check, emit)
    return rep.code, rep.render(as_json)


def cmd_color(args) -> int:
    jobs = [(p, args.check_hypotheses, args.emit, args.json) for p in args.inputs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_color_job, jobs))
    else:
        results = [_color_job(j) for j in jobs]
    for (path, *_), (_, text) in zip(jobs, results):
        if len(jobs) > 1:
            sys.stdout.write(f"== {path} ==\n")
        sys.stdout.write(text)
    return max(code for code, _ in results)


def cmd_verify(args) -> int:
    rep = Report()
    try:
        doc = _read(args.input)
        coloring = doc.coloring
        if args.coloring:
            coloring = _read(args.coloring).coloring
        if coloring is None:
            raise UsageError("no colors block in the document (or --coloring file)")
        bad = find_violation(build_graph(doc.diagram), coloring)
    except ChordColorError as err:
        rep.fail(err)
    else:
        rep.add("colors_used", colors_used(coloring))
        if bad is None:
            rep.add("proper", True)
        else:
            rep.add("proper", False)
            rep.add("violation", list(bad), f"violation: chords {bad[0]} and {bad[1]} cross and share colour {coloring[bad[0]]}")
            rep.code = EXIT_USAGE
    sys.stdout.write(rep.render(args.json))
    return rep.code


def cmd_oracle(args) -> int:
    rep = Report()
    try:
        doc = _read(args.input)
        graph = build_graph(doc.diagram)
        clique = clique_number(graph)
        rep.add("omega", clique.omega)
        rep.add("omega_witness", list(clique.witness), f"omega_witness: {' '.join(map(str, clique.witness))}")
        rep.add("triangles", len(enumerate_triangles(graph)))
        chi, coloring = chromatic_number_exact(graph, limit=args.limit, max_vertices=args.max_vertices)
        if chi is None:
            rep.add("chi", None, f"chi: > {args.limit}")
        else:
            rep.add("chi", chi)
            rep.data["coloring"] = {str(c): v for c, v in sorted(coloring.items())}
            rep.lines.extend(_fmt_coloring(coloring))
    except ChordColorError as err:
        rep.fail(err)
    sys.stdout.write(rep.render(args.json))
    return rep.code


def cmd_gen(args) -> int:
    try:
        inst = gen(GenSpec(args.n, args.mode, args.seed, args.max_attempts))
    except (UsageError, GenerationError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE
    doc = DiagramDocument(inst.diagram, None, inst.arc, inst.A, inst.B)
    text = emit_document(doc)
    if args.json:
        data = {"n": inst.diagram.n, "chords": [list(c) for c in inst.diagram.chords], "mode": args.mode, "seed": args.seed}
        if inst.arc is not None:
            data.update(arc=[inst.arc.start, inst.arc.length], A=sorted(inst.A), B=sorted(inst.B))
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lemma1(args) -> int:
    rep = Report()
    try:
        doc = _read(args.input)
        arc, A, B = _frame(doc, args)
        d = doc.diagram
        enum = enumerate_arc(d, A, arc)
        rep.add("enumeration", list(enum.chords), "enumeration: " + " ".join(f"{i}:{a}" for i, a in enumerate(enum.chords, 1)))
        system = build_intervals(d, enum, B)
        by_iv = color_intervals(system)
        rep.data["intervals"] = {str(b): list(iv) for b, iv in sorted(system.intervals.items())}
        for iv, ids in system.groups.items():
            rep.lines.append(f"interval ({iv[0]}, {iv[1]}) colour {by_iv[iv]}: chords {' '.join(map(str, ids))}")
        coloring = lemma1_color(d, A, B, arc, check=args.check_hypotheses)
        rep.data["coloring"] = {str(c): v for c, v in sorted(coloring.items())}
        rep.lines.extend(_fmt_coloring(coloring))
        rep.add("colors_used", colors_used(coloring))
    except ChordColorError as err:
        rep.fail(err)
    sys.stdout.write(rep.render(args.json))
    return rep.code


def cmd_lemma2(args) -> int:
    rep = Report()
    try:
        doc = _read(args.input)
        arc, A, B = _frame(doc, args)
        d = doc.diagram
        enum = prune_and_enumerate(d, A, arc)
        rep.add("enumeration", list(enum.chords), "enumeration: " + " ".join(f"{i}:{a}" for i, a in enumerate(enum.chords, 1)))
        gaps = build_gaps(d, enum, B, arc)
        rep.data["gaps"] = [[f"{e.chord}{e.side}" for e in ends] for ends in gaps.gaps]
        for j, ends in enumerate(gaps.gaps):
            rep.lines.append(f"gap {j}: " + " ".join(f"{e.chord}{e.side}" for e in ends))
        unt = untangle(gaps)
        rep.data["untangled"] = {str(b): list(unt.diagram.ends(b)) for b in sorted(B)}
        rep.lines.append("untangled: " + " ".join(f"{b}={unt.diagram.ends(b)[0]}-{unt.diagram.ends(b)[1]}" for b in sorted(B)))
        coarse = color_triangle_free(unt.view)
        rep.add("triangle_free_colors", colors_used(coarse))
        coloring = lemma2_color(d, A, B, arc, check=args.check_hypotheses)
        rep.data["coloring"] = {str(c): v for c, v in sorted(coloring.items())}
        rep.lines.extend(_fmt_coloring(coloring))
        rep.add("colors_used", colors_used(coloring))
    except ChordColorError as err:
        rep.fail(err)
    sys.stdout.write(rep.render(args.json))
    return rep.code


def cmd_render(args) -> int:
    try:
        doc = _read(args.input)
        coloring = doc.coloring
        if args.color:
            coloring = color_circle_graph(doc.diagram)
        svg = render_svg(doc.diagram, coloring, size=args.size)
    except ChordColorError as err:
        sys.stderr.write(f"error: {err}\n")
        return exit_code_for(err)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordcolor", description="Colour K4-free circle graphs with at most 30 colours.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, check=True):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        if check:
            p.add_argument("--check-hypotheses", action="store_true", help="assert every lemma hypothesis on the way")

    p = sub.add_parser("color", help="run the 30-colour pipeline")
    p.add_argument("inputs", nargs="+", help="diagram files ('-' for stdin)")
    p.add_argument("--emit", action="store_true", help="print the document with a colors block instead of the report")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for several inputs")
    common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a colouring is proper")
    p.add_argument("input")
    p.add_argument("--coloring", help="take the colors block from this document instead")
    common(p, check=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact clique number and chromatic number")
    p.add_argument("input")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--limit", type=int, default=30)
    common(p, check=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="k4-free")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    for name, func, what in (("lemma1", cmd_lemma1, "interval stage"), ("lemma2", cmd_lemma2, "untangling stage")):
        p = sub.add_parser(name, help=f"run the {what} on one frame")
        p.add_argument("input")
        p.add_argument("--arc", help="START:LENGTH (default: the document's arc block)")
        p.add_argument("--A", help="comma-separated chord ids")
        p.add_argument("--B", help="comma-separated chord ids")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("render", help="draw the diagram as SVG")
    p.add_argument("input")
    p.add_argument("--color", action="store_true", help="colour with the pipeline instead of the colors block")
    p.add_argument("--size", type=int, default=480)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
