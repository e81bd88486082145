"""Maximum matching with blossom contraction, Gallai-Edmonds sets and
Tutte-type deficiency witnesses."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import (ComponentSummary, Graph, VertexSet, add_universal_vertex, bits,
                    component_masks, components_after_deletion, to_list)


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class GallaiEdmonds:
    D: VertexSet
    A: VertexSet
    C: VertexSet

    def to_json(self) -> dict:
        return {"D": to_list(self.D), "A": to_list(self.A), "C": to_list(self.C)}


@dataclass(frozen=True)
class MatchingReport:
    nu: int
    deficiency: int
    matching: tuple[tuple[int, int], ...]
    ge: GallaiEdmonds

    def to_json(self) -> dict:
        return {"nu": self.nu, "deficiency": self.deficiency,
                "matching": [list(e) for e in self.matching], "gallai_edmonds": self.ge.to_json()}


@dataclass(frozen=True)
class DeficiencyWitness:
    s: VertexSet
    summary: ComponentSummary

    @property
    def deficit(self) -> int:
        return self.summary.odd_count - self.s.bit_count()

    def to_json(self) -> dict:
        return {"s": to_list(self.s),
                "odd_components": [to_list(c) for c in self.summary.odd_components],
                "deficit": self.deficit}


class _Forest:
    """Alternating forest grown from a set of exposed roots, with blossom bases."""

    def __init__(self, g: Graph, match: list[int], roots: list[int]):
        n = g.n
        self.g = g
        self.match = match
        self.parent = [-1] * n
        self.base = list(range(n))
        self.even = [False] * n
        self.tree = [-1] * n
        self.queue: deque[int] = deque()
        for r in roots:
            self.even[r] = True
            self.tree[r] = r
            self.queue.append(r)

    def _lca(self, a: int, b: int) -> int:
        match, parent, base = self.match, self.parent, self.base
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[match[b]]

    def _mark(self, v: int, b: int, child: int, blossom: set) -> None:
        match, parent, base = self.match, self.parent, self.base
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[match[v]])
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def grow(self) -> tuple[int, int] | None:
        """Grow until the queue empties or an augmenting edge is found.

        Returns ``(exposed endpoint, None)`` style info as ``(end, -1)`` when an
        odd vertex is exposed, ``(v, to)`` for an even-even edge across trees,
        or None when the forest is complete.
        """
        g, match, parent, base, even, tree = self.g, self.match, self.parent, self.base, self.even, self.tree
        while self.queue:
            v = self.queue.popleft()
            for to in bits(g.adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if even[to]:
                    if tree[to] != tree[v]:
                        return v, to
                    cur = self._lca(v, to)
                    blossom: set = set()
                    self._mark(v, cur, to, blossom)
                    self._mark(to, cur, v, blossom)
                    for i in range(g.n):
                        if base[i] in blossom:
                            base[i] = cur
                            if not even[i]:
                                even[i] = True
                                self.queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    tree[to] = tree[v]
                    if match[to] == -1:
                        return to, -1
                    mate = match[to]
                    even[mate] = True
                    tree[mate] = tree[v]
                    self.queue.append(mate)
        return None


def _augment_from(g: Graph, match: list[int], root: int) -> bool:
    forest = _Forest(g, match, [root])
    hit = forest.grow()
    if hit is None:
        return False
    v = hit[0]
    parent = forest.parent
    while v != -1:
        pv = parent[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv
    return True


def _maximum_mate(g: Graph) -> list[int]:
    match = [-1] * g.n
    for v in range(g.n):
        if match[v] == -1:
            for u in bits(g.adj[v]):
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break
    for v in range(g.n):
        if match[v] == -1:
            _augment_from(g, match, v)
    return match


def _gallai_edmonds(g: Graph, match: list[int]) -> GallaiEdmonds:
    roots = [v for v in range(g.n) if match[v] == -1]
    forest = _Forest(g, match, roots)
    if forest.grow() is not None:
        raise MatchingError("augmenting path remains; matching is not maximum")
    d = a = 0
    for v in range(g.n):
        if forest.even[v]:
            d |= 1 << v
        elif forest.parent[v] != -1:
            a |= 1 << v
    return GallaiEdmonds(d, a, g.full & ~d & ~a)


def maximum_matching(g: Graph) -> MatchingReport:
    match = _maximum_mate(g)
    edges = tuple(sorted((v, match[v]) for v in range(g.n) if v < match[v]))
    nu = len(edges)
    return MatchingReport(nu, g.n - 2 * nu, edges, _gallai_edmonds(g, match))


def matching_number(g: Graph) -> int:
    match = _maximum_mate(g)
    return sum(1 for m in match if m != -1) // 2


def deficiency(g: Graph) -> int:
    return g.n - 2 * matching_number(g)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and deficiency(g) == 0


def has_near_perfect_matching(g: Graph) -> bool:
    """Matching missing exactly one vertex; false for even order by convention."""
    return g.n % 2 == 1 and deficiency(g) == 1


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    return all(has_perfect_matching(g.delete(1 << v)) for v in range(g.n))


def is_bicritical(g: Graph) -> bool:
    if g.n % 2 == 1 or g.n < 2:
        return False
    return all(has_perfect_matching(g.delete(1 << u | 1 << v))
               for u, v in combinations(range(g.n), 2))


def witness_for(g: Graph, s: VertexSet) -> DeficiencyWitness:
    return DeficiencyWitness(s, components_after_deletion(g, s))


def tutte_witness(g: Graph) -> DeficiencyWitness:
    """S = A(G); attains the maximum of c_o(G-S) - |S|, i.e. the deficiency."""
    return witness_for(g, maximum_matching(g).ge.A)


def near_pm_witness(g: Graph) -> DeficiencyWitness | None:
    """Set S with c_o(G-S) >= |S| + 3 via the universal-vertex extension, or None
    when a near-perfect matching exists."""
    if g.n % 2 == 0:
        raise MatchingError("near-perfect witness needs odd order")
    extended = add_universal_vertex(g)
    u = 1 << g.n
    outer = tutte_witness(extended)
    if outer.deficit < 2:
        return None
    if not outer.s & u:
        raise MatchingError("universal vertex missing from the Tutte set")
    w = witness_for(g, outer.s & ~u)
    if w.summary.odd_count < w.s.bit_count() + 3:
        raise MatchingError("witness fails c_o(G-S) >= |S| + 3")
    return w


def odd_components_touching(g: Graph, s: VertexSet, v: int) -> int:
    """Number of odd components of G - s adjacent to v."""
    return sum(1 for c in component_masks(g, g.full & ~s) if c.bit_count() & 1 and g.adj[v] & c)
