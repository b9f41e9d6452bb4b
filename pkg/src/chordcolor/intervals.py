"""Three-colouring chords that all hang off one arc, via integer intervals.

Setting: a set ``A`` of chords with exactly one end on an arc and a set
``B`` of chords lying on the arc, each crossing some chord of ``A``. Number
the A-ends along the arc 1..k. A chord ``b`` crosses a contiguous run of
them, say ``P+1 .. Q``, and is replaced by the interval ``(P, Q)``. When no
triangle holds two B-chords, crossing B-chords give touching intervals
(``Q == P'``) and no two intervals properly cross, so a left-to-right scan
colours the left endpoints with three colours.
"""
from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .chords import Arc, ChordDiagram, build_graph, crosses
from .errors import InvariantError, PreconditionError
from .oracle import Coloring, colors_used, enumerate_triangles
from .trace import Trace

Interval = tuple[int, int]


@dataclass(frozen=True)
class ArcEnumeration:
    """A-chords sorted by their on-arc end. ``chords[i-1]`` is chord number ``i``.

    Index 0 and ``k + 1`` are the virtual boundaries X and Y, at arc positions
    ``-1`` and ``arc.length``.
    """

    arc: Arc
    chords: tuple[int, ...]
    positions: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.chords)

    def boundary_position(self, j: int) -> int:
        """Arc position of point ``A_j`` for ``0 <= j <= k + 1``."""
        if j == 0:
            return -1
        if j == self.k + 1:
            return self.arc.length
        return self.positions[j - 1]

    def gap_of(self, pos: int) -> int:
        """Number of A-ends strictly before arc position ``pos``.

        A non-A position with gap index ``j`` lies between ``A_j`` and ``A_{j+1}``.
        """
        return bisect.bisect_left(self.positions, pos)

    def gap_arc(self, j: int) -> Arc:
        return self.arc.sub_arc(self.boundary_position(j), self.boundary_position(j + 1))


def enumerate_arc(diagram: ChordDiagram, A: Iterable[int], arc: Arc) -> ArcEnumeration:
    placed = []
    for a in A:
        on = [s for s in diagram.ends(a) if s in arc]
        if len(on) != 1:
            raise PreconditionError(
                f"chord {a} has {len(on)} ends on the arc, expected exactly one", condition="A-one-end-on-arc", chord=a
            )
        placed.append((arc.position(on[0]), a))
    placed.sort()
    return ArcEnumeration(arc, tuple(a for _, a in placed), tuple(p for p, _ in placed))


@dataclass(frozen=True)
class IntervalSystem:
    intervals: dict[int, Interval]
    groups: dict[Interval, tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def from_intervals(cls, intervals: Iterable[Interval]) -> IntervalSystem:
        """System whose chord ids are just positions in ``intervals``."""
        per_chord = dict(enumerate(tuple(iv) for iv in intervals))
        return cls(per_chord, _group(per_chord))

    @property
    def distinct(self) -> list[Interval]:
        return sorted(self.groups)


def _group(per_chord: dict[int, Interval]) -> dict[Interval, tuple[int, ...]]:
    groups: dict[Interval, list[int]] = defaultdict(list)
    for cid, iv in sorted(per_chord.items()):
        groups[iv].append(cid)
    return {iv: tuple(ids) for iv, ids in sorted(groups.items())}


def properly_cross(x: Interval, y: Interval) -> bool:
    (p1, q1), (p2, q2) = sorted((x, y))
    return p1 < p2 < q1 < q2


def touch(x: Interval, y: Interval) -> bool:
    return x[1] == y[0] or y[1] == x[0]


def build_intervals(diagram: ChordDiagram, enum: ArcEnumeration, B: Iterable[int]) -> IntervalSystem:
    arc = enum.arc
    a_ends = [diagram.ends(a) for a in enum.chords]
    per_chord: dict[int, Interval] = {}
    for b in sorted(B):
        e = diagram.ends(b)
        if not (e[0] in arc and e[1] in arc):
            raise PreconditionError(f"chord {b} does not have both ends on the arc", condition="B-crosses-A-inside-arc", chord=b)
        hit = [i for i, ae in enumerate(a_ends, 1) if crosses(e, ae)]
        if not hit:
            raise PreconditionError(f"chord {b} crosses no enumerated chord", condition="B-crosses-A-inside-arc", chord=b)
        per_chord[b] = (min(hit) - 1, max(hit))

    groups = _group(per_chord)
    for x, y in combinations(groups, 2):
        if properly_cross(x, y):
            raise InvariantError(
                f"intervals {x} and {y} cross; some triangle holds two chords of B", condition="one-B-per-triangle"
            )
    for b1, b2 in combinations(per_chord, 2):
        if crosses(diagram.ends(b1), diagram.ends(b2)) and not touch(per_chord[b1], per_chord[b2]):
            raise InvariantError(
                f"chords {b1} and {b2} cross but intervals {per_chord[b1]}, {per_chord[b2]} do not touch"
            )
    return IntervalSystem(per_chord, groups)


def color_intervals(system: IntervalSystem) -> dict[Interval, int]:
    """Colour each interval by its left end so touching intervals differ.

    Scan order: take the largest uncoloured left end that is the right end of
    an already coloured interval; failing that, the smallest uncoloured left
    end. At most two colours are ever forbidden, so three suffice.
    """
    intervals = system.distinct
    lefts = sorted({p for p, _ in intervals})
    is_left = set(lefts)
    rights_from: dict[int, list[int]] = defaultdict(list)
    lefts_into: dict[int, list[int]] = defaultdict(list)
    for p, q in intervals:
        rights_from[p].append(q)
        lefts_into[q].append(p)

    point_color: dict[int, int] = {}
    uncolored = set(lefts)
    while uncolored:
        reachable = [L for L in uncolored if any(p in point_color for p in lefts_into[L])]
        L = max(reachable) if reachable else min(uncolored)

        colored_rights = [r for r in rights_from[L] if r in is_left and r in point_color]
        colored_into = [p for p in lefts_into[L] if p in point_color]
        if len(colored_rights) > 1:
            raise InvariantError(f"left end {L}: partners {colored_rights} already coloured")
        if len(colored_into) > 1:
            raise InvariantError(f"left end {L}: intervals from {colored_into} already coloured")
        forbidden = {point_color[r] for r in colored_rights} | {point_color[p] for p in colored_into}
        if len(forbidden) > 2:
            raise InvariantError(f"left end {L}: colours {sorted(forbidden)} all forbidden")
        point_color[L] = min(c for c in range(3) if c not in forbidden)
        uncolored.discard(L)

    return {iv: point_color[iv[0]] for iv in intervals}


def lemma1_color(
    diagram: ChordDiagram,
    A: Iterable[int],
    B: Iterable[int],
    arc: Arc,
    *,
    check: bool = False,
    trace: Trace | None = None,
) -> Coloring:
    """Proper colouring of ``G(B)`` in colours {0, 1, 2}."""
    A, B = frozenset(A), frozenset(B)
    if check:
        check_lemma1_triangles(diagram, A, B)
    enum = enumerate_arc(diagram, A, arc)
    system = build_intervals(diagram, enum, B)
    by_interval = color_intervals(system)
    coloring = {b: by_interval[iv] for b, iv in system.intervals.items()}
    if trace is not None:
        trace.record("lemma1", size=len(B), intervals=len(system.groups), colors=colors_used(coloring))
    return coloring


def check_lemma1_triangles(diagram: ChordDiagram, A: frozenset[int], B: frozenset[int]) -> None:
    """Every triangle of G(A | B) has at most one chord of B."""
    graph = build_graph(diagram.restrict(A | B))
    for tri in enumerate_triangles(graph):
        if sum(v in B for v in tri) > 1:
            raise PreconditionError(f"triangle {tri} holds more than one chord of B", condition="one-B-per-triangle")
