import pytest
from hypothesis import given, strategies as st

from chordcolor import Arc, ChordDiagram, ParseError, UsageError
from chordcolor.docformat import DiagramDocument, canonical, emit_diagram, emit_document, parse_diagram, parse_document

from helpers import diagrams

TWO = "# chordcolor-diagram v1\n2\n0 2\n1 3\n"


def test_parse_example():
    d = parse_diagram(TWO)
    assert d == ChordDiagram.from_pairs([(0, 2), (1, 3)])
    assert emit_diagram(d) == TWO


def test_parse_tolerates_comments_and_order():
    doc = parse_document("2  # two chords\n\n3 1\n 2 0\ncolors: 4\n  7\n")
    assert doc.diagram.ends(0) == (1, 3)
    assert doc.coloring == {0: 4, 1: 7}
    assert canonical("2\n3 1\n2 0\n") == "# chordcolor-diagram v1\n2\n1 3\n0 2\n"


def test_lemma_blocks():
    doc = parse_document(TWO + "arc: 3 3\nA: 0\nB: 1\n")
    assert doc.arc == Arc(3, 3, 4) and doc.A == {0} and doc.B == {1}
    assert emit_document(doc) == TWO + "arc: 3 3\nA: 0\nB: 1\n"


def test_empty_diagram():
    assert emit_diagram(ChordDiagram(0, {})) == "# chordcolor-diagram v1\n0\n"
    assert parse_diagram("0\n").n == 0
    assert emit_diagram(ChordDiagram(0, {}), {}) == "# chordcolor-diagram v1\n0\ncolors:\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("x\n", 1),
        ("2\n0 2\n", 2),
        ("2\n0 2\n1 2\n", 3),
        ("2\n0 2\n1 4\n", 3),
        ("2\n0 2 1\n1 3\n", 2),
        ("1\n0 1\ncolors: 0 1\n", 3),
        ("1\n0 1\ncolors: -1\n", 3),
        ("1\n0 1\nshape: 1\n", 3),
        ("1\n0 1\nA: 0\nA: 0\n", 4),
        ("1\n0 1\nB: 3\n", 3),
        ("1\n0 1\narc: 0 5\n", 3),
        ("# chordcolor-diagram v2\n0\n", 1),
        ("1\n0 1\n0 1\n", 3),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_document(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_emit_rejects_partial_diagram():
    d = ChordDiagram.from_pairs([(0, 1), (2, 3)]).restrict([1])
    with pytest.raises(UsageError):
        emit_diagram(d)
    with pytest.raises(UsageError):
        emit_diagram(ChordDiagram.from_pairs([(0, 1)]), {5: 0})


@st.composite
def documents(draw):
    d = draw(diagrams(max_n=12))
    coloring = draw(st.none() | st.lists(st.integers(0, 40), min_size=d.n, max_size=d.n).map(lambda v: dict(enumerate(v))))
    arc = A = B = None
    if d.n and draw(st.booleans()):
        arc = Arc(draw(st.integers(0, d.num_slots - 1)), draw(st.integers(0, d.num_slots)), d.num_slots)
        A = frozenset(draw(st.sets(st.integers(0, d.n - 1))))
        B = frozenset(draw(st.sets(st.integers(0, d.n - 1))))
    return DiagramDocument(d, coloring, arc, A, B)


@given(documents())
def test_round_trip(doc):
    text = emit_document(doc)
    assert parse_document(text) == doc
    assert canonical(text) == text
