"""Exact ground truth: clique number, coloring checks, exact chromatic number.

These routines know nothing about chords; they work on any
:class:`~chordcolor.chords.IntersectionGraph` and serve as the reference
against which the constructive pipeline is tested.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .chords import IntersectionGraph
from .errors import SizeLimitError, UsageError

Coloring = dict[int, int]

DEFAULT_MAX_VERTICES = 16


def colors_used(coloring: Mapping[int, int]) -> int:
    return len(set(coloring.values()))


@dataclass(frozen=True)
class CliqueReport:
    omega: int
    witness: tuple[int, ...]


def find_violation(graph: IntersectionGraph, coloring: Mapping[int, int]) -> tuple[int, int] | None:
    """First monochromatic edge in ``graph.edges()`` order, or None."""
    missing = [v for v in graph.vertices if v not in coloring]
    if missing:
        raise UsageError(f"coloring is not defined on chords {missing}")
    for u, v in graph.edges():
        if coloring[u] == coloring[v]:
            return u, v
    return None


def is_proper(graph: IntersectionGraph, coloring: Mapping[int, int]) -> bool:
    return find_violation(graph, coloring) is None


def clique_number(graph: IntersectionGraph, cap: int | None = None) -> CliqueReport:
    """Maximum clique, stopping early once a clique of size ``cap`` is found."""
    verts, masks = graph.bitmasks()
    if cap is None:
        cap = max(1, len(verts))
    if cap < 1:
        raise UsageError("cap must be at least 1")
    if not verts:
        return CliqueReport(0, ())
    best: list[int] = [verts[0]]

    def expand(clique: list[int], cand: int) -> bool:
        nonlocal best
        if len(clique) > len(best):
            best = [verts[i] for i in clique]
            if len(best) >= cap:
                return True
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return False
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            clique.append(i)
            if expand(clique, cand & masks[i]):
                return True
            clique.pop()
        return False

    expand([], (1 << len(verts)) - 1)
    return CliqueReport(len(best), tuple(sorted(best)))


def enumerate_triangles(graph: IntersectionGraph) -> list[tuple[int, int, int]]:
    out = []
    for u in graph.vertices:
        higher = sorted(w for w in graph.adjacency[u] if w > u)
        for x, v in enumerate(higher):
            nv = graph.adjacency[v]
            for w in higher[x + 1:]:
                if w in nv:
                    out.append((u, v, w))
    out.sort()
    return out


def greedy_dsatur(graph: IntersectionGraph) -> Coloring:
    verts, masks = graph.bitmasks()
    n = len(verts)
    color = [-1] * n
    sat = [0] * n  # bitmask of neighbour colours
    degree = [m.bit_count() for m in masks]
    for _ in range(n):
        v = max((i for i in range(n) if color[i] < 0), key=lambda i: (sat[i].bit_count(), degree[i], -i))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        m = masks[v]
        while m:
            low = m & -m
            sat[low.bit_length() - 1] |= 1 << c
            m ^= low
    return {verts[i]: color[i] for i in range(n)}


def find_coloring(graph: IntersectionGraph, k: int) -> Coloring | None:
    """Exact k-colorability by DSATUR-ordered backtracking.

    Colors are introduced in increasing order, which removes colour-permutation
    symmetry. No size cap: callers bound the instance themselves.
    """
    verts, masks = graph.bitmasks()
    n = len(verts)
    if n == 0:
        return {}
    if k <= 0:
        return None
    color = [-1] * n
    full = (1 << k) - 1

    def neighbour_colors(v: int) -> int:
        used = 0
        m = masks[v]
        while m:
            low = m & -m
            c = color[low.bit_length() - 1]
            if c >= 0:
                used |= 1 << c
            m ^= low
        return used

    def pick() -> tuple[int, int]:
        best_v, best_key, best_used = -1, None, 0
        for v in range(n):
            if color[v] >= 0:
                continue
            used = neighbour_colors(v)
            key = (used.bit_count(), masks[v].bit_count())
            if best_key is None or key > best_key:
                best_v, best_key, best_used = v, key, used
        return best_v, best_used

    def solve(done: int, top: int) -> bool:
        if done == n:
            return True
        v, used = pick()
        free = full & ~used
        if not free:
            return False
        c = 0
        while free >> c:
            if free >> c & 1:
                if c > top + 1:
                    break
                color[v] = c
                if solve(done + 1, max(top, c)):
                    return True
                color[v] = -1
            c += 1
        return False

    if not solve(0, -1):
        return None
    return {verts[i]: color[i] for i in range(n)}


def chromatic_number_exact(
    graph: IntersectionGraph, limit: int = 30, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[int | None, Coloring | None]:
    """Exact chromatic number, or ``(None, None)`` if it exceeds ``limit``.

    Bounds the search between the clique number and a DSATUR upper bound,
    then tries each k in between.
    """
    if len(graph) > max_vertices:
        raise SizeLimitError(f"exact search capped at {max_vertices} vertices, got {len(graph)}")
    if not len(graph):
        return 0, {}
    lower = clique_number(graph).omega
    greedy = greedy_dsatur(graph)
    upper = colors_used(greedy)
    for k in range(lower, min(upper, limit + 1)):
        found = find_coloring(graph, k)
        if found is not None:
            return k, found
    if upper <= limit:
        return upper, greedy
    return None, None
