"""Fifteen-colouring chords on an arc that each cross some outside chord.

The A-ends cut the arc into gaps. Inside every gap the B-endpoints are
reordered so that all right ends come before all left ends; this kills
exactly the B-crossings whose right and left ends share a gap and yields a
triangle-free set ``C``. A five-colouring of ``C`` pulled back to ``B``
splits it into classes to which the interval scan applies, giving
``3 * class + refinement`` in 0..14.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .chords import Arc, ChordDiagram, build_graph, crosses
from .errors import InvariantError, K4Error, PreconditionError
from .intervals import ArcEnumeration, check_lemma1_triangles, enumerate_arc, lemma1_color
from .oracle import Coloring, clique_number, colors_used, enumerate_triangles, find_coloring
from .trace import Trace

LEFT, RIGHT = "L", "R"


@dataclass(frozen=True)
class GapEnd:
    position: int
    slot: int
    chord: int
    side: str


@dataclass(frozen=True)
class GapStructure:
    """B-endpoints bucketed by gap. ``gaps[j]`` lies between ``A_j`` and ``A_{j+1}``."""

    diagram: ChordDiagram
    enum: ArcEnumeration
    chords: frozenset[int]
    gaps: tuple[tuple[GapEnd, ...], ...]

    def gap_of_end(self, chord: int, side: str) -> int:
        for j, ends in enumerate(self.gaps):
            for e in ends:
                if e.chord == chord and e.side == side:
                    return j
        raise KeyError((chord, side))

    def end_gaps(self) -> dict[int, tuple[int, int]]:
        """chord -> (gap of left end, gap of right end)."""
        out: dict[int, list[int]] = {}
        for j, ends in enumerate(self.gaps):
            for e in ends:
                out.setdefault(e.chord, [0, 0])[e.side == RIGHT] = j
        return {c: (g[0], g[1]) for c, g in out.items()}


@dataclass(frozen=True)
class UntangledDiagram:
    diagram: ChordDiagram
    chords: frozenset[int]
    permutation: dict[int, int]

    @property
    def view(self) -> ChordDiagram:
        return self.diagram.restrict(self.chords)


def prune_and_enumerate(diagram: ChordDiagram, A: Iterable[int], arc: Arc) -> ArcEnumeration:
    """Drop A-chords with no end on the arc and enumerate the rest."""
    kept = []
    for a in A:
        lo, hi = diagram.ends(a)
        on = (lo in arc) + (hi in arc)
        if on == 2:
            raise PreconditionError(f"chord {a} has both ends on the arc", condition="A-at-most-one-end-on-arc", chord=a)
        if on == 1:
            kept.append(a)
    return enumerate_arc(diagram, kept, arc)


def build_gaps(diagram: ChordDiagram, enum: ArcEnumeration, B: Iterable[int], arc: Arc) -> GapStructure:
    B = frozenset(B)
    buckets: list[list[GapEnd]] = [[] for _ in range(enum.k + 1)]
    for b in sorted(B):
        s1, s2 = diagram.ends(b)
        if s1 not in arc or s2 not in arc:
            raise PreconditionError(f"chord {b} does not have both ends on the arc", condition="B-crosses-A-inside-arc", chord=b)
        (p_left, s_left), (p_right, s_right) = sorted([(arc.position(s1), s1), (arc.position(s2), s2)])
        g_left, g_right = enum.gap_of(p_left), enum.gap_of(p_right)
        if g_left == g_right:
            raise PreconditionError(
                f"chord {b} has both ends in gap {g_left}, so it crosses no chord of A", condition="B-crosses-A-inside-arc", chord=b
            )
        buckets[g_left].append(GapEnd(p_left, s_left, b, LEFT))
        buckets[g_right].append(GapEnd(p_right, s_right, b, RIGHT))
    gaps = tuple(tuple(sorted(bucket, key=lambda e: e.position)) for bucket in buckets)
    return GapStructure(diagram, enum, B, gaps)


def untangle(gaps: GapStructure) -> UntangledDiagram:
    """Within each gap put right ends first, then left ends, each in original order."""
    new_slot: dict[tuple[int, str], int] = {}
    permutation: dict[int, int] = {}
    for ends in gaps.gaps:
        order = [e for e in ends if e.side == RIGHT] + [e for e in ends if e.side == LEFT]
        for target, e in zip(ends, order):
            new_slot[e.chord, e.side] = target.slot
            permutation[e.slot] = target.slot
    moved = {b: (new_slot[b, LEFT], new_slot[b, RIGHT]) for b in gaps.chords}
    result = UntangledDiagram(gaps.diagram.with_ends(moved), gaps.chords, permutation)

    triangles = enumerate_triangles(build_graph(result.view))
    if triangles:
        tri = triangles[0]
        raise PreconditionError(
            f"untangled chords {tri} form a triangle; with {_witness(gaps, result, tri)} "
            "this is a K4 in G(A | B)",
            condition="K4-free",
            triangle=tri,
        )
    return result


def _witness(gaps: GapStructure, result: UntangledDiagram, tri) -> str:
    arc, enum = gaps.enum.arc, gaps.enum
    spans = [sorted(arc.position(s) for s in result.diagram.ends(c)) for c in tri]
    lo, hi = max(s[0] for s in spans), min(s[1] for s in spans)
    for a, p in zip(enum.chords, enum.positions):
        if lo < p < hi:
            return f"chord {a}"
    return "no enumerated chord"


def check_untangle(gaps: GapStructure, untangled: UntangledDiagram) -> None:
    """A-vs-B crossings survive unchanged; B-vs-B crossings vanish exactly for
    pairs with one's right end and the other's left end in a common gap."""
    before, after = gaps.diagram, untangled.diagram
    for a in gaps.enum.chords:
        for b in gaps.chords:
            if crosses(before.ends(a), before.ends(b)) != crosses(after.ends(a), after.ends(b)):
                raise InvariantError(f"untangling changed the crossing of chords {a} and {b}")
    end_gaps = gaps.end_gaps()
    for b1, b2 in combinations(sorted(gaps.chords), 2):
        was = crosses(before.ends(b1), before.ends(b2))
        now = crosses(after.ends(b1), after.ends(b2))
        shared = end_gaps[b1][1] == end_gaps[b2][0] or end_gaps[b2][1] == end_gaps[b1][0]
        if now and not was:
            raise InvariantError(f"untangling created a crossing of chords {b1} and {b2}")
        if was and now == shared:
            raise InvariantError(f"crossing of chords {b1} and {b2} handled wrongly (shared gap: {shared})")


def color_triangle_free(diagram_c: ChordDiagram) -> Coloring:
    """Proper colouring of a triangle-free circle graph in at most five colours.

    Five colours always suffice for triangle-free circle graphs; this finds
    one by exact backtracking search.
    """
    graph = build_graph(diagram_c)
    triangles = enumerate_triangles(graph)
    if triangles:
        raise PreconditionError(f"graph has triangle {triangles[0]}", condition="triangle-free", triangle=triangles[0])
    coloring = find_coloring(graph, 5)
    if coloring is None:
        raise InvariantError("no 5-colouring of a triangle-free chord set; input is not a circle graph?")
    return coloring


def lemma2_color(
    diagram: ChordDiagram,
    A: Iterable[int],
    B: Iterable[int],
    arc: Arc,
    *,
    check: bool = False,
    trace: Trace | None = None,
) -> Coloring:
    """Proper colouring of ``G(B)`` in colours 0..14."""
    A, B = frozenset(A), frozenset(B)
    if not B:
        return {}
    if check:
        report = clique_number(build_graph(diagram.restrict(A | B)), 4)
        if report.omega >= 4:
            raise K4Error(report.witness)
    enum = prune_and_enumerate(diagram, A, arc)
    gaps = build_gaps(diagram, enum, B, arc)
    untangled = untangle(gaps)
    if check:
        check_untangle(gaps, untangled)

    coarse = color_triangle_free(untangled.view)
    if trace is not None:
        trace.record("triangle_free", size=len(B), colors=colors_used(coarse))

    pruned = frozenset(enum.chords)
    end_gaps = gaps.end_gaps() if check else None
    coloring: Coloring = {}
    for w in sorted(set(coarse.values())):
        cls = frozenset(b for b in B if coarse[b] == w)
        if check:
            _check_class(diagram, pruned, cls, end_gaps)
        fine = lemma1_color(diagram, pruned, cls, arc, check=check, trace=trace)
        for b, s in fine.items():
            coloring[b] = 3 * w + s

    if trace is not None:
        trace.record("lemma2", size=len(B), colors=colors_used(coloring))
    return coloring


def _check_class(diagram: ChordDiagram, A: frozenset[int], cls: frozenset[int], end_gaps) -> None:
    for b1, b2 in combinations(sorted(cls), 2):
        if crosses(diagram.ends(b1), diagram.ends(b2)):
            g1, g2 = end_gaps[b1], end_gaps[b2]
            if g1[1] != g2[0] and g2[1] != g1[0]:
                raise InvariantError(f"same-class chords {b1}, {b2} cross without sharing a gap")
    try:
        check_lemma1_triangles(diagram, A, cls)
    except PreconditionError as err:
        raise InvariantError(f"colour class handed to the interval stage: {err.message}") from err
