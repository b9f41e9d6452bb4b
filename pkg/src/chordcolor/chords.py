"""Chord diagrams, arcs and circle graphs.

Everything is slot-order combinatorics: the circle carries ``num_slots``
positions in cyclic order and each chord joins two distinct positions.
Two chords cross iff their endpoints interleave.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import UsageError


class ChordDiagram:
    """An immutable set of chords on a circle of ``num_slots`` slots.

    A *full* diagram pairs every slot (``num_slots == 2 * n``) and has chord
    ids ``0 .. n-1``. Views produced by :meth:`restrict` keep the parent's
    slots and ids but expose only a subset of chords.
    """

    __slots__ = ("num_slots", "_ends", "_owner")

    def __init__(self, num_slots: int, ends: Mapping[int, tuple[int, int]]):
        owner: dict[int, int] = {}
        normalized: dict[int, tuple[int, int]] = {}
        for cid, (a, b) in sorted(ends.items()):
            for s in (a, b):
                if not 0 <= s < num_slots:
                    raise UsageError(f"chord {cid}: slot {s} out of range 0..{num_slots - 1}")
                if s in owner:
                    raise UsageError(f"chords {owner[s]} and {cid} share slot {s}")
                owner[s] = cid
            if a == b:
                raise UsageError(f"chord {cid} has both ends at slot {a}")
            normalized[cid] = (a, b) if a < b else (b, a)
        self.num_slots = num_slots
        self._ends = MappingProxyType(normalized)
        self._owner = MappingProxyType(owner)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> ChordDiagram:
        """Full diagram: the pairs must form a perfect pairing of ``0 .. 2n-1``."""
        pairs = [tuple(p) for p in pairs]
        return cls(2 * len(pairs), dict(enumerate(pairs)))

    @property
    def n(self) -> int:
        return len(self._ends)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(self._ends)

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        """``(slot_a, slot_b)`` per chord, in id order."""
        return tuple(self._ends.values())

    @property
    def slots(self) -> tuple[int, ...]:
        """Occupied slots in cyclic order."""
        return tuple(sorted(self._owner))

    @property
    def is_full(self) -> bool:
        return self.num_slots == 2 * self.n and self.ids == tuple(range(self.n))

    def ends(self, cid: int) -> tuple[int, int]:
        try:
            return self._ends[cid]
        except KeyError:
            raise UsageError(f"unknown chord id {cid}") from None

    def owner(self, slot: int) -> int | None:
        return self._owner.get(slot)

    def __contains__(self, cid) -> bool:
        return cid in self._ends

    def __len__(self) -> int:
        return len(self._ends)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.num_slots == other.num_slots and dict(self._ends) == dict(other._ends)

    def __hash__(self) -> int:
        return hash((self.num_slots, tuple(self._ends.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{c}:{a}-{b}" for c, (a, b) in self._ends.items())
        return f"ChordDiagram(num_slots={self.num_slots}, {{{body}}})"

    def restrict(self, keep: Iterable[int]) -> ChordDiagram:
        keep = set(keep)
        unknown = keep - set(self._ends)
        if unknown:
            raise UsageError(f"unknown chord ids {sorted(unknown)}")
        return ChordDiagram(self.num_slots, {c: e for c, e in self._ends.items() if c in keep})

    def with_ends(self, updates: Mapping[int, tuple[int, int]]) -> ChordDiagram:
        """Copy with some chords moved. Validation re-runs on the result."""
        ends = dict(self._ends)
        for cid, e in updates.items():
            if cid not in ends:
                raise UsageError(f"unknown chord id {cid}")
            ends[cid] = e
        return ChordDiagram(self.num_slots, ends)

    def rotated(self, k: int) -> ChordDiagram:
        m = self.num_slots
        return ChordDiagram(m, {c: ((a + k) % m, (b + k) % m) for c, (a, b) in self._ends.items()})


@dataclass(frozen=True)
class Arc:
    """A contiguous cyclic run of ``length`` slots beginning at ``start``.

    Positions along the arc run ``0 .. length-1`` from the X side to the Y side.
    ``length == 0`` is the empty arc (a gap holding no endpoints).
    """

    start: int
    length: int
    num_slots: int

    def __post_init__(self):
        if self.num_slots < 0 or not 0 <= self.length <= self.num_slots:
            raise UsageError(f"bad arc length {self.length} on {self.num_slots} slots")
        if self.num_slots and not 0 <= self.start < self.num_slots:
            raise UsageError(f"arc start {self.start} out of range")

    @classmethod
    def between(cls, first_slot: int, last_slot: int, num_slots: int) -> Arc:
        """Inclusive run ``first_slot .. last_slot`` read cyclically."""
        return cls(first_slot, (last_slot - first_slot) % num_slots + 1, num_slots)

    @classmethod
    def full(cls, num_slots: int) -> Arc:
        return cls(0, num_slots, num_slots)

    @property
    def first_slot(self) -> int | None:
        return self.start if self.length else None

    @property
    def last_slot(self) -> int | None:
        return (self.start + self.length - 1) % self.num_slots if self.length else None

    def __contains__(self, slot: int) -> bool:
        if not self.num_slots:
            return False
        return (slot - self.start) % self.num_slots < self.length

    def position(self, slot: int) -> int:
        """Offset of ``slot`` from the start of the arc."""
        pos = (slot - self.start) % self.num_slots
        if pos >= self.length:
            raise UsageError(f"slot {slot} is not on {self}")
        return pos

    def slot_at(self, pos: int) -> int:
        return (self.start + pos) % self.num_slots

    def sub_arc(self, lo_pos: int, hi_pos: int) -> Arc:
        """Slots strictly between arc positions ``lo_pos`` and ``hi_pos``.

        ``-1`` and ``self.length`` stand for the X and Y boundaries.
        """
        if not -1 <= lo_pos < hi_pos <= self.length:
            raise UsageError(f"bad sub-arc ({lo_pos}, {hi_pos}) of length {self.length}")
        return Arc((self.start + lo_pos + 1) % self.num_slots, hi_pos - lo_pos - 1, self.num_slots)


@dataclass(frozen=True)
class IntersectionGraph:
    vertices: tuple[int, ...]
    adjacency: Mapping[int, frozenset[int]]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self):
        for u in self.vertices:
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield u, v

    def induced(self, keep: Iterable[int]) -> IntersectionGraph:
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return IntersectionGraph(verts, {v: self.adjacency[v] & keep for v in verts})

    def bitmasks(self) -> tuple[tuple[int, ...], list[int]]:
        """Vertices in order plus adjacency as bitmasks over their indices."""
        index = {v: i for i, v in enumerate(self.vertices)}
        masks = []
        for v in self.vertices:
            m = 0
            for u in self.adjacency[v]:
                m |= 1 << index[u]
            masks.append(m)
        return self.vertices, masks

    def __len__(self) -> int:
        return len(self.vertices)


def crosses(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Interleaving test on two ``(lo, hi)`` endpoint pairs with distinct slots."""
    a, b = e1
    c, d = e2
    return (a < c < b) != (a < d < b)


def intersects(diagram: ChordDiagram, i: int, j: int) -> bool:
    if i == j:
        raise UsageError(f"intersects() needs two distinct chords, got {i} twice")
    return crosses(diagram.ends(i), diagram.ends(j))


def build_graph(diagram: ChordDiagram) -> IntersectionGraph:
    ids = diagram.ids
    ends = [diagram.ends(c) for c in ids]
    adj: dict[int, set[int]] = {c: set() for c in ids}
    for x in range(len(ids)):
        a, b = ends[x]
        for y in range(x + 1, len(ids)):
            c, d = ends[y]
            if (a < c < b) != (a < d < b):
                adj[ids[x]].add(ids[y])
                adj[ids[y]].add(ids[x])
    return IntersectionGraph(ids, {c: frozenset(s) for c, s in adj.items()})


def ends_on_arc(diagram: ChordDiagram, i: int, arc: Arc) -> int:
    a, b = diagram.ends(i)
    return (a in arc) + (b in arc)


def restrict(diagram: ChordDiagram, keep: Iterable[int]) -> ChordDiagram:
    return diagram.restrict(keep)


def connected_components(graph: IntersectionGraph) -> list[list[int]]:
    """Components as sorted id lists, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for start in graph.vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in graph.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps
