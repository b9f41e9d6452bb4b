import pytest
from hypothesis import given, strategies as st

from chordcolor import Arc, ChordDiagram, InvariantError, PreconditionError, build_graph
from chordcolor.generate import GenSpec, gen
from chordcolor.intervals import (
    IntervalSystem,
    build_intervals,
    color_intervals,
    enumerate_arc,
    lemma1_color,
    properly_cross,
    touch,
)

from helpers import brute_proper

# arc 0..7 on 12 slots; A-chords 1, 3, 5 leave the arc at slots 2, 5, 7
THREE = ChordDiagram.from_pairs([(0, 1), (2, 8), (3, 4), (5, 9), (6, 11), (7, 10)])
THREE_ARC = Arc.between(0, 7, 12)

# A-ends at slots 1, 3, 5; chord 2 = (2, 4) crosses only the middle one
SINGLE = ChordDiagram.from_pairs([(0, 9), (1, 6), (2, 4), (3, 7), (5, 8)])
SINGLE_ARC = Arc.between(0, 5, 10)

# two B-chords sharing a crossing with A-chord 3, so intervals (0,2) and (1,3) cross
CROSSING = ChordDiagram.from_pairs([(0, 4), (1, 7), (2, 6), (3, 8), (5, 9)])
CROSSING_ARC = Arc.between(0, 6, 10)


def test_enumerate_empty():
    enum = enumerate_arc(THREE, [], THREE_ARC)
    assert enum.k == 0 and enum.chords == ()


def test_enumerate_sorts_by_on_arc_end():
    enum = enumerate_arc(THREE, [5, 1, 3], THREE_ARC)
    assert enum.chords == (1, 3, 5)
    assert [THREE_ARC.slot_at(p) for p in enum.positions] == [2, 5, 7]
    assert enum.boundary_position(0) == -1 and enum.boundary_position(4) == THREE_ARC.length


def test_enumerate_rejects_wrong_end_count():
    with pytest.raises(PreconditionError) as info:
        enumerate_arc(THREE, [0], THREE_ARC)
    assert info.value.details["chord"] == 0


def test_enumeration_agrees_with_sort_oracle():
    for seed in range(30):
        inst = gen(GenSpec(12, "lemma1-shape", seed))
        enum = enumerate_arc(inst.diagram, inst.A, inst.arc)
        walk = [inst.arc.slot_at(p) for p in range(inst.arc.length)]
        expected = [inst.diagram.owner(s) for s in walk if inst.diagram.owner(s) in inst.A]
        assert list(enum.chords) == expected


def test_build_intervals_examples():
    enum = enumerate_arc(SINGLE, [1, 3, 4], SINGLE_ARC)
    assert build_intervals(SINGLE, enum, []).intervals == {}
    system = build_intervals(SINGLE, enum, [2])
    assert system.intervals == {2: (1, 2)}


def test_build_intervals_errors():
    enum = enumerate_arc(SINGLE, [3, 4], SINGLE_ARC)
    with pytest.raises(PreconditionError):
        build_intervals(SINGLE, enumerate_arc(SINGLE, [1], SINGLE_ARC), [2])
    with pytest.raises(PreconditionError):
        build_intervals(SINGLE, enum, [0])
    enum = enumerate_arc(CROSSING, [1, 3, 4], CROSSING_ARC)
    with pytest.raises(InvariantError):
        build_intervals(CROSSING, enum, [0, 2])
    with pytest.raises(PreconditionError):
        lemma1_color(CROSSING, [1, 3, 4], [0, 2], CROSSING_ARC, check=True)


def _oracle_interval(inst, b):
    """P and Q by counting A-ends before each end of b."""
    a_pos = sorted(inst.arc.position(s) for a in inst.A for s in inst.diagram.ends(a) if s in inst.arc)
    lo, hi = sorted(inst.arc.position(s) for s in inst.diagram.ends(b))
    return sum(p < lo for p in a_pos), sum(p < hi for p in a_pos)


def test_figure_shaped_instances_non_crossing():
    for seed in range(40):
        inst = gen(GenSpec(15, "lemma1-shape", seed))
        enum = enumerate_arc(inst.diagram, inst.A, inst.arc)
        system = build_intervals(inst.diagram, enum, inst.B)
        for b, iv in system.intervals.items():
            assert iv == _oracle_interval(inst, b)
            assert iv[0] < iv[1]
        ivs = system.distinct
        assert not any(properly_cross(x, y) for x in ivs for y in ivs if x != y)


def test_color_intervals_examples():
    assert color_intervals(IntervalSystem.from_intervals([(0, 3)])) == {(0, 3): 0}
    chain = color_intervals(IntervalSystem.from_intervals([(0, 1), (1, 2), (2, 3)]))
    assert chain[(0, 1)] != chain[(1, 2)] != chain[(2, 3)]
    assert chain == {(0, 1): 0, (1, 2): 1, (2, 3): 0}
    star = color_intervals(IntervalSystem.from_intervals([(0, 2), (2, 4), (2, 5)]))
    assert star[(2, 4)] == star[(2, 5)] != star[(0, 2)]


@st.composite
def non_crossing_families(draw):
    k = draw(st.integers(1, 12))
    raw = draw(st.lists(st.tuples(st.integers(0, k - 1), st.integers(1, k)), max_size=25))
    family = []
    for p, q in raw:
        if p < q and not any(properly_cross((p, q), iv) for iv in family):
            family.append((p, q))
    return family


@given(non_crossing_families())
def test_color_intervals_touching_differ(family):
    system = IntervalSystem.from_intervals(family)
    coloring = color_intervals(system)
    assert set(coloring.values()) <= {0, 1, 2}
    for x in coloring:
        for y in coloring:
            if touch(x, y):
                assert coloring[x] != coloring[y]
            if x[0] == y[0]:
                assert coloring[x] == coloring[y]


def test_lemma1_trivial_cases():
    assert lemma1_color(SINGLE, [1, 3, 4], [], SINGLE_ARC) == {}
    assert lemma1_color(SINGLE, [1, 3, 4], [2], SINGLE_ARC) == {2: 0}


@pytest.mark.parametrize("n", [3, 8, 15, 24])
def test_lemma1_random_instances(n):
    for seed in range(40):
        inst = gen(GenSpec(n, "lemma1-shape", seed))
        coloring = lemma1_color(inst.diagram, inst.A, inst.B, inst.arc, check=True)
        assert set(coloring) == inst.B
        assert set(coloring.values()) <= {0, 1, 2}
        assert brute_proper(inst.diagram.restrict(inst.B), coloring)
        assert coloring == lemma1_color(inst.diagram, inst.A, inst.B, inst.arc)


def test_same_interval_chords_do_not_cross():
    for seed in range(40):
        inst = gen(GenSpec(18, "lemma1-shape", seed))
        system = build_intervals(inst.diagram, enumerate_arc(inst.diagram, inst.A, inst.arc), inst.B)
        g = build_graph(inst.diagram.restrict(inst.B))
        for ids in system.groups.values():
            assert not any(g.has_edge(u, v) for u in ids for v in ids if u != v)
