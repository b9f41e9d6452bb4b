"""Constructive 30-colouring of K4-free circle graphs, with exact oracles."""
from .chords import Arc, ChordDiagram, IntersectionGraph, build_graph, connected_components, ends_on_arc, intersects, restrict
from .driver import ColoringConfig, color_circle_graph, color_with_trace
from .errors import (
    ChordColorError,
    GenerationError,
    InvariantError,
    K4Error,
    ParseError,
    PreconditionError,
    SizeLimitError,
    UsageError,
)
from .generate import GenSpec, gen, generate
from .oracle import chromatic_number_exact, clique_number, colors_used, enumerate_triangles, find_violation, is_proper

__version__ = "0.1.0"
