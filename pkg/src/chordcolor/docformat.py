"""Plain-text diagram documents.

::

    # chordcolor-diagram v1
    2
    0 2
    1 3
    colors: 0 15
    arc: 0 3
    A: 0
    B: 1

Line 1 is the chord count, then one ``slot slot`` line per chord (chord id =
line order). The keyed blocks are optional; ``colors:`` takes one integer per
chord and may wrap over several lines. ``#`` starts a comment.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .chords import Arc, ChordDiagram
from .errors import ParseError, UsageError

FORMAT_VERSION = 1
HEADER = f"# chordcolor-diagram v{FORMAT_VERSION}"
_VERSION_RE = re.compile(r"#\s*chordcolor-diagram\s+v(\d+)")
_KEYS = ("colors", "arc", "A", "B")


@dataclass(frozen=True)
class DiagramDocument:
    diagram: ChordDiagram
    coloring: dict[int, int] | None = None
    arc: Arc | None = None
    A: frozenset[int] | None = None
    B: frozenset[int] | None = None
    version: int = FORMAT_VERSION


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_document(text: str) -> DiagramDocument:
    lines: list[tuple[int, str]] = []
    version = FORMAT_VERSION
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _VERSION_RE.match(raw.strip())
        if m:
            version = int(m.group(1))
            if version != FORMAT_VERSION:
                raise ParseError(f"unsupported format version {version}", lineno)
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty document", 1)

    lineno, first = lines[0]
    count = _ints(first.split(), lineno)
    if len(count) != 1 or count[0] < 0:
        raise ParseError("first line must be a single non-negative chord count", lineno)
    n = count[0]
    chord_lines = lines[1:1 + n]
    if len(chord_lines) < n or any(":" in body for _, body in chord_lines):
        got = sum(1 for _, body in chord_lines if ":" not in body)
        last = chord_lines[got - 1][0] if got else lineno
        raise ParseError(f"expected {n} chord lines, found {got}", last)

    seen: dict[int, int] = {}
    pairs = []
    for lineno, body in chord_lines:
        vals = _ints(body.split(), lineno)
        if len(vals) != 2:
            raise ParseError(f"a chord line needs two slots, got {len(vals)}", lineno)
        for s in vals:
            if not 0 <= s < 2 * n:
                raise ParseError(f"slot {s} out of range 0..{2 * n - 1}", lineno)
            if s in seen:
                raise ParseError(f"slot {s} already used on line {seen[s]}", lineno)
            seen[s] = lineno
        pairs.append((vals[0], vals[1]))
    diagram = ChordDiagram.from_pairs(pairs)

    blocks: dict[str, tuple[int, list[str]]] = {}
    current = None
    for lineno, body in lines[1 + n:]:
        if ":" in body:
            key, rest = body.split(":", 1)
            key = key.strip()
            if key not in _KEYS:
                raise ParseError(f"unknown block {key!r}", lineno)
            if key in blocks:
                raise ParseError(f"duplicate block {key!r}", lineno)
            blocks[key] = (lineno, rest.split())
            current = key
        elif current is None:
            raise ParseError(f"expected {n} chord lines, found more", lineno)
        else:
            blocks[current][1].extend(body.split())

    coloring = arc = A = B = None
    if "colors" in blocks:
        lineno, toks = blocks["colors"]
        vals = _ints(toks, lineno)
        if len(vals) != n:
            raise ParseError(f"colors block needs {n} integers, got {len(vals)}", lineno)
        if any(v < 0 for v in vals):
            raise ParseError("colors must be non-negative", lineno)
        coloring = dict(enumerate(vals))
    if "arc" in blocks:
        lineno, toks = blocks["arc"]
        vals = _ints(toks, lineno)
        if len(vals) != 2:
            raise ParseError("arc block needs a start slot and a length", lineno)
        try:
            arc = Arc(vals[0], vals[1], 2 * n)
        except UsageError as err:
            raise ParseError(err.message, lineno) from None
    for key in ("A", "B"):
        if key in blocks:
            lineno, toks = blocks[key]
            ids = _ints(toks, lineno)
            bad = [i for i in ids if not 0 <= i < n]
            if bad:
                raise ParseError(f"unknown chord ids {bad} in {key} block", lineno)
            if key == "A":
                A = frozenset(ids)
            else:
                B = frozenset(ids)
    return DiagramDocument(diagram, coloring, arc, A, B, version)


def parse_diagram(text: str) -> ChordDiagram:
    return parse_document(text).diagram


def _block(key, values) -> str:
    return key + ":" + "".join(f" {v}" for v in values)


def emit_document(doc: DiagramDocument) -> str:
    d = doc.diagram
    if not d.is_full:
        raise UsageError("only full diagrams (ids 0..n-1 pairing every slot) can be written")
    out = [HEADER, str(d.n)]
    out += [f"{a} {b}" for a, b in d.chords]
    if doc.coloring is not None:
        if set(doc.coloring) != set(d.ids):
            raise UsageError("coloring does not match the diagram's chords")
        out.append(_block("colors", (doc.coloring[c] for c in d.ids)))
    if doc.arc is not None:
        out.append(f"arc: {doc.arc.start} {doc.arc.length}")
    if doc.A is not None:
        out.append(_block("A", sorted(doc.A)))
    if doc.B is not None:
        out.append(_block("B", sorted(doc.B)))
    return "\n".join(out) + "\n"


def emit_diagram(diagram: ChordDiagram, coloring: dict[int, int] | None = None) -> str:
    return emit_document(DiagramDocument(diagram, coloring))


def canonical(text: str) -> str:
    return emit_document(parse_document(text))
