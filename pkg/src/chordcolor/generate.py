"""Seeded instance generators.

Every mode is driven by ``random.Random(seed)`` alone, so a GenSpec fully
determines its output. Emitted instances are checked against their mode's
contract with the exact oracles before being returned.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .chords import Arc, ChordDiagram, build_graph, crosses
from .errors import GenerationError, UsageError
from .intervals import check_lemma1_triangles
from .oracle import clique_number

MODES = ("uniform-matching", "k4-free", "triangle-free", "lemma1-shape", "lemma2-shape")

# below this size uniform rejection sampling is cheap and unbiased
SMALL_N = 8


@dataclass(frozen=True)
class GenSpec:
    n: int
    mode: str = "k4-free"
    seed: int = 0
    max_attempts: int = 1000

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"n must be non-negative, got {self.n}")
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}; choose from {', '.join(MODES)}")
        if self.max_attempts < 1:
            raise UsageError("max_attempts must be positive")


@dataclass(frozen=True)
class Instance:
    """A diagram, plus the arc and chord sets for the lemma-shaped modes."""

    diagram: ChordDiagram
    arc: Arc | None = None
    A: frozenset[int] | None = None
    B: frozenset[int] | None = None


class _Layout:
    """Endpoint sequence under construction; each label occurs twice."""

    def __init__(self):
        self.seq: list[int] = []
        self.masks: dict[int, int] = {}

    def crossing_mask(self, i: int, j: int) -> int:
        """Labels crossed by a new chord with ends inserted before ``seq[i]`` and ``seq[j]``."""
        inside = 0
        for label in self.seq[i:j]:
            inside ^= 1 << label
        return inside

    def creates_clique(self, nbrs: int, size: int) -> bool:
        if size == 3:
            return any(self.masks[u] & nbrs for u in _bits(nbrs))
        for u in _bits(nbrs):
            common = self.masks[u] & nbrs
            for v in _bits(common):
                if self.masks[v] & common:
                    return True
        return False

    def insert(self, label: int, i: int, j: int, nbrs: int) -> None:
        self.seq[i:j] = [label, *self.seq[i:j], label]
        self.masks[label] = nbrs
        for u in _bits(nbrs):
            self.masks[u] |= 1 << label

    def try_insert(self, label: int, i: int, j: int, forbid: int | None) -> bool:
        nbrs = self.crossing_mask(i, j)
        if forbid is not None and self.creates_clique(nbrs, forbid):
            return False
        self.insert(label, i, j, nbrs)
        return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_diagram(seq: list[int], rotation: int) -> tuple[ChordDiagram, dict[int, int]]:
    """Rotate the endpoint sequence and number chords by their first slot."""
    m = len(seq)
    by_slot = [None] * m
    for pos, label in enumerate(seq):
        by_slot[(pos + rotation) % m] = label
    relabel: dict[int, int] = {}
    ends: dict[int, list[int]] = {}
    for slot, label in enumerate(by_slot):
        if label not in relabel:
            relabel[label] = len(relabel)
        ends.setdefault(relabel[label], []).append(slot)
    return ChordDiagram(m, {c: tuple(e) for c, e in ends.items()}), relabel


def uniform_matching(n: int, rng: random.Random) -> ChordDiagram:
    seq = [label for label in range(n) for _ in range(2)]
    rng.shuffle(seq)
    return _to_diagram(seq, 0)[0]


def _incremental(n: int, forbid: int, rng: random.Random, max_attempts: int) -> ChordDiagram:
    layout = _Layout()
    for label in range(n):
        for _ in range(max_attempts):
            size = len(layout.seq)
            i = rng.randint(0, size)
            j = rng.randint(i, size)
            if layout.try_insert(label, i, j, forbid):
                break
        else:
            raise GenerationError(f"could not place chord {label} of {n}", max_attempts)
    return _to_diagram(layout.seq, rng.randrange(max(1, 2 * n)))[0]


def _clique_free(n: int, forbid: int, rng: random.Random, max_attempts: int) -> ChordDiagram:
    if n <= SMALL_N:
        for _ in range(max_attempts):
            d = uniform_matching(n, rng)
            if clique_number(build_graph(d), forbid).omega < forbid:
                return d
    return _incremental(n, forbid, rng, max_attempts)


def _lemma1_shape(n: int, rng: random.Random, max_attempts: int) -> Instance:
    """A-chords with one end on the arc, B-chords realising non-crossing intervals."""
    k = max(1, n // 3)
    m = n - k if n else 0
    intervals: list[tuple[int, int]] = []
    for _ in range(m):
        for _ in range(max_attempts):
            p = rng.randrange(k)
            q = rng.randint(p + 1, k)
            if not any(pp < p < qq < q or p < pp < q < qq for pp, qq in intervals):
                intervals.append((p, q))
                break
        else:
            raise GenerationError("could not place a non-crossing interval", max_attempts)

    keys = list(range(m))
    rng.shuffle(keys)
    a_labels = list(range(m, m + k))
    arc_seq: list[int] = []
    for g in range(k + 1):
        rights = sorted((b for b in range(m) if intervals[b][1] == g), key=lambda b: (-intervals[b][0], -keys[b]))
        lefts = sorted((b for b in range(m) if intervals[b][0] == g), key=lambda b: (-intervals[b][1], keys[b]))
        arc_seq.extend(_merge(rights, lefts, rng))
        if g < k:
            arc_seq.append(a_labels[g])
    off_seq = a_labels[:]
    rng.shuffle(off_seq)
    return _lemma_instance(arc_seq, off_seq, a_labels, rng)


def _merge(xs: list[int], ys: list[int], rng: random.Random) -> list[int]:
    """Uniformly random interleaving preserving each list's order."""
    out, i, j = [], 0, 0
    while i < len(xs) or j < len(ys):
        if j == len(ys) or (i < len(xs) and rng.randrange(len(xs) - i + len(ys) - j) < len(xs) - i):
            out.append(xs[i])
            i += 1
        else:
            out.append(ys[j])
            j += 1
    return out


def _lemma2_shape(n: int, rng: random.Random, max_attempts: int) -> Instance:
    """K4-free instance: A-chords with at most one end on the arc, B on the arc crossing A."""
    k = max(1, n // 3)
    extra = min(rng.randint(0, 2), max(0, n - k))
    m = max(0, n - k - extra)
    layout = _Layout()
    a_labels = list(range(k))
    arc_len = 0
    for a in a_labels:
        # arc end goes after the arc ends placed so far, other end anywhere off the arc
        for _ in range(max_attempts):
            off = rng.randint(0, len(layout.seq) - arc_len)
            if layout.try_insert(a, arc_len, arc_len + off, 4):
                arc_len += 1
                break
        else:
            raise GenerationError(f"could not place A-chord {a}", max_attempts)
    b_labels = list(range(k, k + m))
    for b in b_labels:
        for _ in range(max_attempts):
            i = rng.randint(0, arc_len)
            j = rng.randint(i, arc_len)
            if not any(label in a_labels for label in layout.seq[i:j]):
                continue
            if layout.try_insert(b, i, j, 4):
                arc_len += 2
                break
        else:
            raise GenerationError(f"could not place B-chord {b}", max_attempts)
    off_labels = list(range(k + m, k + m + extra))
    for a in off_labels:
        for _ in range(max_attempts):
            i = rng.randint(arc_len, len(layout.seq))
            j = rng.randint(i, len(layout.seq))
            if layout.try_insert(a, i, j, 4):
                break
        else:
            raise GenerationError(f"could not place off-arc chord {a}", max_attempts)
    arc_seq, off_seq = layout.seq[:arc_len], layout.seq[arc_len:]
    return _lemma_instance(arc_seq, off_seq, a_labels + off_labels, rng)


def _lemma_instance(arc_seq: list[int], off_seq: list[int], a_labels: list[int], rng: random.Random) -> Instance:
    seq = arc_seq + off_seq
    if not seq:
        return Instance(ChordDiagram(0, {}), Arc(0, 0, 0), frozenset(), frozenset())
    rotation = rng.randrange(len(seq))
    diagram, relabel = _to_diagram(seq, rotation)
    arc = Arc(rotation % len(seq), len(arc_seq), len(seq))
    a_set = frozenset(relabel[a] for a in a_labels)
    return Instance(diagram, arc, a_set, frozenset(diagram.ids) - a_set)


def _verify(spec: GenSpec, inst: Instance) -> None:
    d = inst.diagram
    if spec.mode in ("k4-free", "lemma2-shape", "triangle-free"):
        limit = 3 if spec.mode == "triangle-free" else 4
        if clique_number(build_graph(d), limit).omega >= limit:
            raise GenerationError(f"{spec.mode} instance has a {limit}-clique", 1)
    if inst.arc is None:
        return
    for a in inst.A:
        on = sum(s in inst.arc for s in d.ends(a))
        if on > 1 or (spec.mode == "lemma1-shape" and on != 1):
            raise GenerationError(f"chord {a} has {on} ends on the arc", 1)
    for b in inst.B:
        if not all(s in inst.arc for s in d.ends(b)) or not any(crosses(d.ends(b), d.ends(a)) for a in inst.A):
            raise GenerationError(f"chord {b} violates the B-chord conditions", 1)
    if spec.mode == "lemma1-shape":
        check_lemma1_triangles(d, inst.A, inst.B)


def gen(spec: GenSpec) -> Instance:
    rng = random.Random(spec.seed)
    if spec.n == 0 and spec.mode.startswith("lemma"):
        inst = _lemma_instance([], [], [], rng)
    elif spec.mode == "uniform-matching":
        inst = Instance(uniform_matching(spec.n, rng))
    elif spec.mode == "k4-free":
        inst = Instance(_clique_free(spec.n, 4, rng, spec.max_attempts))
    elif spec.mode == "triangle-free":
        inst = Instance(_clique_free(spec.n, 3, rng, spec.max_attempts))
    elif spec.mode == "lemma1-shape":
        inst = _lemma1_shape(spec.n, rng, spec.max_attempts)
    else:
        inst = _lemma2_shape(spec.n, rng, spec.max_attempts)
    _verify(spec, inst)
    return inst


def generate(n: int, mode: str = "k4-free", seed: int = 0) -> ChordDiagram:
    return gen(GenSpec(n, mode, seed)).diagram
