"""Canonical labelling by individualisation-refinement.

Equitable refinement on bitmask cells, depth-first search over the
individualisation tree, and pruning with the automorphisms found at
equivalent leaves.  The leaf certificate is the relabelled adjacency packed
into one integer; the canonical labelling is the leaf with the largest
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .graph6 import to_graph6


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]          # order[p] = vertex placed at position p
    certificate: int
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]         # orbits[v] = smallest vertex in v's orbit

    def canonical_graph(self, g: Graph) -> Graph:
        perm = [0] * g.n
        for p, v in enumerate(self.order):
            perm[v] = p
        return g.relabel(perm)


def refine(adj, cells: list[int], queue: list[int]) -> list[int]:
    """Refine an ordered partition until it is equitable.

    ``queue`` lists splitter cells; the result depends only on the ordered
    partition and the graph, never on vertex names.
    """
    n_cells = len(cells)
    total = sum(c.bit_count() for c in cells)
    head = 0
    while head < len(queue) and n_cells < total:
        w = queue[head]
        head += 1
        i = 0
        while i < n_cells:
            x = cells[i]
            if not x & (x - 1):
                i += 1
                continue
            groups: dict[int, int] = {}
            m = x
            while m:
                low = m & -m
                m ^= low
                c = (adj[low.bit_length() - 1] & w).bit_count()
                groups[c] = groups.get(c, 0) | low
            if len(groups) == 1:
                i += 1
                continue
            pieces = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = pieces
            n_cells += len(pieces) - 1
            try:
                k = queue.index(x, head)
            except ValueError:
                sizes = [p.bit_count() for p in pieces]
                big = sizes.index(max(sizes))
                queue.extend(p for j, p in enumerate(pieces) if j != big)
            else:
                queue[k] = pieces[0]
                queue.extend(pieces[1:])
            i += len(pieces)
    return cells


def _certificate(adj, order: list[int]) -> int:
    n = len(order)
    inv = [0] * n
    for p, v in enumerate(order):
        inv[v] = p
    cert = 0
    for p, v in enumerate(order):
        row = 0
        m = adj[v]
        while m:
            low = m & -m
            m ^= low
            row |= 1 << inv[low.bit_length() - 1]
        cert |= row << (p * n)
    return cert


def _orbit_roots(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first: tuple[list[int], int] | None = None
        self.best: tuple[list[int], int] | None = None
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        gamma = tuple(gamma)
        if any(v != i for i, v in enumerate(gamma)) and gamma not in self.gens:
            self.gens.append(gamma)

    def run(self, cells: list[int], path: list[int]) -> int | None:
        level = len(path)
        target = -1
        for idx, c in enumerate(cells):
            if c & (c - 1):
                target = idx
                break
        if target < 0:
            return self._leaf(cells, path)

        cell = cells[target]
        tried: list[int] = []
        roots = None
        seen_gens = -1
        m = cell
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if tried:
                if seen_gens != len(self.gens):
                    fixing = [g for g in self.gens if all(g[p] == p for p in path)]
                    roots = _orbit_roots(self.n, fixing) if fixing else None
                    seen_gens = len(self.gens)
                if roots is not None and any(roots[v] == roots[t] for t in tried):
                    continue
            tried.append(v)
            child = cells[:target] + [low, cell ^ low] + cells[target + 1:]
            child = refine(self.adj, child, [low])
            path.append(v)
            jump = self.run(child, path)
            path.pop()
            if jump is not None and jump < level:
                return jump
        return None

    def _leaf(self, cells: list[int], path: list[int]) -> int | None:
        order = [c.bit_length() - 1 for c in cells]
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = self.best = (order, cert)
            self.first_path = list(path)
            self.best_path = list(path)
            return None
        if cert == self.first[1]:
            self._automorphism(self.first[0], order)
            return _common_prefix(self.first_path, path)
        if cert == self.best[1]:
            self._automorphism(self.best[0], order)
            return _common_prefix(self.best_path, path)
        if cert > self.best[1]:
            self.best = (order, cert)
            self.best_path = list(path)
        return None


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def canonical_labelling(g: Graph) -> Labelling:
    if g.n == 0:
        return Labelling((), 0, (), ())
    search = _Search(g)
    cells = refine(g.adj, [g.full], [g.full])
    search.run(cells, [])
    order, cert = search.best
    gens = tuple(search.gens)
    return Labelling(tuple(order), cert, gens, tuple(_orbit_roots(g.n, gens)))


def canonical_graph(g: Graph) -> Graph:
    return canonical_labelling(g).canonical_graph(g)


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return to_graph6(canonical_graph(g))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_labelling(a).certificate == canonical_labelling(b).certificate


def automorphism_orbits(g: Graph) -> list[int]:
    return list(canonical_labelling(g).orbits)
