"""Thirty-colouring a K4-free circle graph.

Colour one chord per component, then recurse: the uncoloured chords
touching the coloured frontier get fifteen fresh colours from the other
palette, and what is left splits into independent gaps, each handled one
level deeper with the roles of the palettes swapped.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .chords import Arc, ChordDiagram, build_graph, connected_components, crosses
from .errors import ChordColorError, InvariantError, K4Error, PreconditionError
from .intervals import ArcEnumeration
from .oracle import Coloring, clique_number, colors_used, find_violation
from .trace import Trace
from .untangle import lemma2_color, prune_and_enumerate

PALETTE_SIZE = 15
MAX_COLORS = 2 * PALETTE_SIZE


@dataclass
class ColoringConfig:
    """``check_hypotheses`` turns on every lemma-hypothesis assertion."""

    check_hypotheses: bool = False
    trace: Trace | None = None


@dataclass(frozen=True)
class PaletteState:
    depth: int
    colors: dict[int, int] = field(default_factory=dict)

    @property
    def palette(self) -> range:
        return palette_for(self.depth)


def palette_for(depth: int) -> range:
    """LOW = 0..14 on even depths, HIGH = 15..29 on odd ones."""
    base = PALETTE_SIZE * (depth % 2)
    return range(base, base + PALETTE_SIZE)


@dataclass(frozen=True)
class RecursionFrame:
    diagram: ChordDiagram
    arc: Arc
    A: frozenset[int]
    B: frozenset[int]
    depth: int = 0


def split_touching(diagram: ChordDiagram, A: Iterable[int], B: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    A_ends = [diagram.ends(a) for a in A]
    B = frozenset(B)
    C = frozenset(b for b in B if any(crosses(diagram.ends(b), e) for e in A_ends))
    if B and not C:
        comp = _component_of(diagram, B, min(B))
        raise PreconditionError(
            f"component {comp} contains no chord of A", condition="component-touches-A", component=comp
        )
    return C, B - C


def _component_of(diagram: ChordDiagram, chords: frozenset[int], start: int) -> list[int]:
    for comp in connected_components(build_graph(diagram.restrict(chords))):
        if start in comp:
            return comp
    raise KeyError(start)


def partition_by_gap(
    diagram: ChordDiagram, enum: ArcEnumeration, Bprime: Iterable[int], *, check: bool = False
) -> list[tuple[int, frozenset[int]]]:
    arc = enum.arc
    parts: dict[int, set[int]] = {}
    for b in sorted(Bprime):
        lo, hi = diagram.ends(b)
        if lo not in arc or hi not in arc:
            raise PreconditionError(f"chord {b} does not have both ends on the arc", condition="B-inside-arc", chord=b)
        g1, g2 = enum.gap_of(arc.position(lo)), enum.gap_of(arc.position(hi))
        if g1 != g2:
            raise InvariantError(f"chord {b} spans an A-end but crosses no chord of A")
        parts.setdefault(g1, set()).add(b)
    out = [(j, frozenset(s)) for j, s in sorted(parts.items())]
    if check:
        for x, (_, s1) in enumerate(out):
            for _, s2 in out[x + 1:]:
                for b1 in s1:
                    for b2 in s2:
                        if crosses(diagram.ends(b1), diagram.ends(b2)):
                            raise InvariantError(f"chords {b1} and {b2} from different gaps cross")
    return out


def check_frame(frame: RecursionFrame) -> None:
    """Hypotheses (1), (3), (4) of the recursion step; (2) is checked on pruning."""
    diagram, A, B = frame.diagram, frame.A, frame.B
    graph = build_graph(diagram.restrict(A | B))
    report = clique_number(graph, 4)
    if report.omega >= 4:
        raise K4Error(report.witness)
    for b in B:
        lo, hi = diagram.ends(b)
        if lo not in frame.arc or hi not in frame.arc:
            raise PreconditionError(f"chord {b} does not have both ends on the arc", condition="B-inside-arc")
    for comp in connected_components(graph):
        if not A.intersection(comp):
            raise PreconditionError(f"component {comp} contains no chord of A", condition="component-touches-A")


def lemma3_color(frame: RecursionFrame, state: PaletteState, config: ColoringConfig | None = None) -> PaletteState:
    """Extend ``state`` (which colours ``frame.A`` from its depth's palette) to ``frame.B``."""
    config = config or ColoringConfig()
    if not frame.B:
        return state
    check = config.check_hypotheses
    own, other = palette_for(frame.depth), palette_for(frame.depth + 1)
    for a in frame.A:
        if a not in state.colors or state.colors[a] not in own:
            raise InvariantError(f"chord {a} is not coloured from palette {own}")
    if check:
        check_frame(frame)

    diagram, arc = frame.diagram, frame.arc
    enum = prune_and_enumerate(diagram, frame.A, arc)
    C, rest = split_touching(diagram, enum.chords, frame.B)
    fresh = lemma2_color(diagram, enum.chords, C, arc, check=check, trace=config.trace)
    if len(fresh) != len(C) or any(not 0 <= c < PALETTE_SIZE for c in fresh.values()):
        raise InvariantError(f"interval/untangle stage returned colours outside 0..{PALETTE_SIZE - 1}")
    colors = dict(state.colors)
    for b, c in fresh.items():
        colors[b] = other.start + c
    if config.trace is not None:
        config.trace.record("lemma3", depth=frame.depth, size=len(frame.B), touching=tuple(sorted(C)))

    result = PaletteState(state.depth, colors)
    for j, Bj in partition_by_gap(diagram, enum, rest, check=check):
        sub = RecursionFrame(diagram, enum.gap_arc(j), C, Bj, frame.depth + 1)
        try:
            deeper = lemma3_color(sub, PaletteState(frame.depth + 1, result.colors), config)
        except ChordColorError as err:
            raise err.with_context(f"depth {sub.depth} gap {j}")
        result = PaletteState(state.depth, deeper.colors)
    return result


def color_circle_graph(diagram: ChordDiagram, config: ColoringConfig | None = None) -> Coloring:
    """Proper colouring of a K4-free circle graph in at most 30 colours."""
    config = config or ColoringConfig()
    graph = build_graph(diagram)
    report = clique_number(graph, 4)
    if report.omega >= 4:
        raise K4Error(report.witness)

    colors: Coloring = {}
    for comp in connected_components(graph):
        root = comp[0]
        d_slot = diagram.ends(root)[1]
        arc = Arc((d_slot + 1) % diagram.num_slots, diagram.num_slots - 1, diagram.num_slots)
        frame = RecursionFrame(diagram, arc, frozenset([root]), frozenset(comp[1:]), 0)
        state = lemma3_color(frame, PaletteState(0, {root: 0}), config)
        colors.update(state.colors)

    bad = find_violation(graph, colors)
    if bad is not None:
        raise InvariantError(f"final colouring gives chords {bad} the same colour")
    if colors_used(colors) > MAX_COLORS or any(not 0 <= c < MAX_COLORS for c in colors.values()):
        raise InvariantError(f"final colouring leaves the range 0..{MAX_COLORS - 1}")
    return {c: colors[c] for c in sorted(colors)}


def color_with_trace(diagram: ChordDiagram, check_hypotheses: bool = False) -> tuple[Coloring, Trace]:
    trace = Trace()
    return color_circle_graph(diagram, ColoringConfig(check_hypotheses, trace)), trace

