"""Isomorph-free generation of small graphs by canonical augmentation.

Each graph on ``k+1`` vertices is built from its unique parent on ``k``
vertices by adding a vertex ``v`` joined to a set ``X``.  ``X`` ranges over
orbit representatives of the parent's automorphism group, and the child is
kept only when ``v`` lies in the child's canonical deletion orbit.  No global
table of seen graphs is kept.
"""

from __future__ import annotations

from typing import Iterator

from .canon import Labelling, canonical_labelling
from .graph import Graph, is_connected
from .graph6 import to_graph6

MAX_ENUMERATION_ORDER = 9

# Number of isomorphism classes of graphs / connected graphs on n vertices.
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346,
                9: 274668, 10: 12005168}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117,
                    9: 261080, 10: 11716571}


def _subset_orbit_reps(k: int, gens) -> list[int]:
    """Smallest member of every orbit of the group on subsets of ``range(k)``."""
    total = 1 << k
    if not gens:
        return list(range(total))
    images = [[1 << gamma[v] for v in range(k)] for gamma in gens]
    seen = bytearray(total)
    reps = []
    for x in range(total):
        if seen[x]:
            continue
        reps.append(x)
        seen[x] = 1
        stack = [x]
        while stack:
            y = stack.pop()
            for img in images:
                z = 0
                m = y
                while m:
                    low = m & -m
                    m ^= low
                    z |= img[low.bit_length() - 1]
                if not seen[z]:
                    seen[z] = 1
                    stack.append(z)
    return reps


def _deletion_keys(adj: list[int]) -> list[int]:
    deg = [row.bit_count() for row in adj]
    keys = []
    for row in adj:
        s = 0
        m = row
        while m:
            low = m & -m
            m ^= low
            s += deg[low.bit_length() - 1]
        keys.append(deg[len(keys)] << 12 | s)
    return keys


def _canonical_child(child: Graph, lab: Labelling) -> tuple[Graph, Labelling]:
    """Relabel ``child`` canonically and carry its automorphisms across."""
    n = child.n
    pos = [0] * n
    for p, v in enumerate(lab.order):
        pos[v] = p
    gens = []
    for gamma in lab.generators:
        new = [0] * n
        for v in range(n):
            new[pos[v]] = pos[gamma[v]]
        gens.append(tuple(new))
    orbits = [0] * n
    for v in range(n):
        orbits[pos[v]] = pos[lab.orbits[v]]
    roots = {}
    for p in range(n):
        roots.setdefault(orbits[p], p)
    canon = child.relabel(pos)
    return canon, Labelling(tuple(range(n)), lab.certificate, tuple(gens),
                            tuple(roots[orbits[p]] for p in range(n)))


def _children(parent: Graph, lab: Labelling) -> list[tuple[str, Graph, Labelling]]:
    k = parent.n
    new = 1 << k
    out = []
    for x in _subset_orbit_reps(k, lab.generators):
        adj = list(parent.adj)
        m = x
        while m:
            low = m & -m
            m ^= low
            adj[low.bit_length() - 1] |= new
        adj.append(x)
        keys = _deletion_keys(adj)
        top = max(keys)
        if keys[k] != top:
            continue
        child = Graph(k + 1, adj, check=False)
        child_lab = canonical_labelling(child)
        if keys.count(top) > 1:
            # the tied vertex placed last by the canonical order defines the orbit
            last = max((p for p, v in enumerate(child_lab.order) if keys[v] == top))
            chosen = child_lab.order[last]
            if child_lab.orbits[chosen] != child_lab.orbits[k]:
                continue
        canon, canon_lab = _canonical_child(child, child_lab)
        out.append((to_graph6(canon), canon, canon_lab))
    out.sort(key=lambda item: item[0])
    return out


def _grow(g: Graph, lab: Labelling, n: int) -> Iterator[Graph]:
    for _, child, child_lab in _children(g, lab):
        if child.n == n:
            yield child
        else:
            yield from _grow(child, child_lab, n)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on n vertices."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration order must be in 1..{MAX_ENUMERATION_ORDER}, got {n}")
    root = Graph(1, [0], check=False)
    if n == 1:
        stream: Iterator[Graph] = iter([root])
    else:
        stream = _grow(root, canonical_labelling(root), n)
    for g in stream:
        if not connected_only or is_connected(g):
            yield g


def enumerate_upto(n: int, connected_only: bool = False) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from enumerate_graphs(k, connected_only)
