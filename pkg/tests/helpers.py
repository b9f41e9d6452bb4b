"""Independent reference implementations used only by the tests.

None of these share code with the package: crossings are decided by walking
the circle, cliques by subset enumeration, chromatic numbers by
inclusion-exclusion over independent sets.
"""
from itertools import combinations

from hypothesis import strategies as st

from chordcolor import ChordDiagram


def walk_crosses(num_slots, e1, e2):
    """Walk from one end of e1 to the other; count e2's ends met strictly between."""
    start, stop = e1
    met = 0
    s = (start + 1) % num_slots
    while s != stop:
        met += s in e2
        s = (s + 1) % num_slots
    return met == 1


def brute_adjacency(diagram):
    ids = diagram.ids
    adj = {c: set() for c in ids}
    for i, j in combinations(ids, 2):
        if walk_crosses(diagram.num_slots, diagram.ends(i), diagram.ends(j)):
            adj[i].add(j)
            adj[j].add(i)
    return adj


def brute_edges(diagram):
    adj = brute_adjacency(diagram)
    return [(i, j) for i in adj for j in adj[i] if i < j]


def brute_proper(diagram, coloring):
    return all(coloring[i] != coloring[j] for i, j in brute_edges(diagram))


def brute_omega(adj, max_size=None):
    verts = sorted(adj)
    best = 1 if verts else 0
    top = len(verts) if max_size is None else max_size
    for k in range(2, top + 1):
        if any(all(b in adj[a] for a, b in combinations(sub, 2)) for sub in combinations(verts, k)):
            best = k
        else:
            break
    return best


def brute_triangles(adj):
    verts = sorted(adj)
    return [t for t in combinations(verts, 3) if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]


def brute_components(adj):
    """Union-find."""
    parent = {v: v for v in adj}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u in adj:
        for v in adj[u]:
            parent[find(u)] = find(v)
    groups = {}
    for v in adj:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def inclusion_exclusion_chromatic(adj):
    """Smallest k such that the vertex set is covered by k independent sets."""
    verts = sorted(adj)
    n = len(verts)
    if n == 0:
        return 0
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for v in verts:
        for u in adj[v]:
            nbr[idx[v]] |= 1 << idx[u]
    full = 1 << n
    # indep[S] = number of independent subsets of S, including the empty set
    indep = [0] * full
    indep[0] = 1
    for S in range(1, full):
        v = (S & -S).bit_length() - 1
        rest = S & ~(1 << v)
        indep[S] = indep[rest] + indep[rest & ~nbr[v]]
    for k in range(1, n + 1):
        total = 0
        for S in range(full):
            sign = -1 if (n - bin(S).count("1")) % 2 else 1
            total += sign * indep[S] ** k
        if total > 0:
            return k
    return n


@st.composite
def diagrams(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    slots = draw(st.permutations(range(2 * n)))
    return ChordDiagram.from_pairs([(slots[2 * i], slots[2 * i + 1]) for i in range(n)])


def plant_k4(diagram, rng):
    """Insert four pairwise crossing chords at random places; return the new diagram and their ids."""
    seq = [None] * diagram.num_slots
    for c in diagram.ids:
        a, b = diagram.ends(c)
        seq[a] = seq[b] = c
    n = diagram.n
    new = [n, n + 1, n + 2, n + 3]
    positions = sorted(rng.sample(range(len(seq) + 8), 8))
    out = []
    src = iter(seq)
    labels = iter(new + new)
    for p in range(len(seq) + 8):
        out.append(next(labels) if p in positions else next(src))
    ends = {}
    for slot, label in enumerate(out):
        ends.setdefault(label, []).append(slot)
    return ChordDiagram(len(out), {c: tuple(e) for c, e in ends.items()}), new
