"""Bitmask graph representation, component summaries and named constructions.

Vertices are the integers ``0..n-1``; a vertex set is a plain ``int`` whose
bit ``i`` marks vertex ``i``.  Graphs are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

VertexSet = int


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: VertexSet) -> list[int]:
    return list(bits(mask))


class GraphError(ValueError):
    """Raised for invalid graph data or construction parameters."""


class Graph:
    """Simple undirected graph on ``n <= 64`` vertices stored as bitmasks."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if check:
            if not 0 <= n <= MAX_VERTICES:
                raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
            if len(adj) != n:
                raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for i, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {i} references a vertex >= {n}")
                if row >> i & 1:
                    raise GraphError(f"loop at vertex {i}")
                for j in bits(row):
                    if not adj[j] >> i & 1:
                        raise GraphError(f"asymmetric adjacency between {i} and {j}")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_nbhd(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def neighbours_of(self, s: VertexSet) -> VertexSet:
        out = 0
        for v in bits(s):
            out |= self.adj[v]
        return out

    def is_complete(self) -> bool:
        full = self.full
        return all(row | (1 << i) == full for i, row in enumerate(self.adj))

    def induced(self, s: VertexSet) -> Graph:
        """Subgraph induced on ``s``, relabelled in ascending vertex order."""
        verts = to_list(s)
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & s):
                row |= 1 << index[u]
            adj.append(row)
        return Graph(len(verts), adj, check=False)

    def delete(self, s: VertexSet) -> Graph:
        return self.induced(self.full & ~s)

    def add_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, check=False)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph(self.n, adj, check=False)

    def complement(self) -> Graph:
        full = self.full
        return Graph(self.n, [full & ~row & ~(1 << i) for i, row in enumerate(self.adj)], check=False)


@dataclass(frozen=True)
class ComponentSummary:
    components: tuple[VertexSet, ...]
    odd_count: int
    even_count: int

    @property
    def total(self) -> int:
        return len(self.components)

    @property
    def odd_components(self) -> tuple[VertexSet, ...]:
        return tuple(c for c in self.components if c.bit_count() % 2)

    @property
    def even_components(self) -> tuple[VertexSet, ...]:
        return tuple(c for c in self.components if not c.bit_count() % 2)


def component_masks(g: Graph, within: VertexSet) -> list[VertexSet]:
    """Connected components of ``g[within]``, ordered by smallest vertex."""
    adj = g.adj
    rest = within
    comps = []
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & within & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def components_after_deletion(g: Graph, s: VertexSet = 0) -> ComponentSummary:
    if s & ~g.full:
        raise GraphError("deleted set contains vertices outside the graph")
    comps = component_masks(g, g.full & ~s)
    odd = sum(1 for c in comps if c.bit_count() & 1)
    return ComponentSummary(tuple(comps), odd, len(comps) - odd)


def odd_component_count(g: Graph, s: VertexSet = 0) -> int:
    return sum(1 for c in component_masks(g, g.full & ~s) if c.bit_count() & 1)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(component_masks(g, g.full)) == 1


# -- named constructions ------------------------------------------------------


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n, [0] * n)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    _need(k >= 1, "star needs k >= 1")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite graph needs both sides non-empty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cocktail_party(m: int) -> Graph:
    """K_{2m} minus the perfect matching {2i, 2i+1}."""
    _need(m >= 1, "cocktail_party needs m >= 1")
    n = 2 * m
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if i // 2 != j // 2])


def triple_isolated() -> Graph:
    return empty(3)


def fig1_nine_vertex() -> Graph:
    """The 9-vertex exceptional graph: u=0, v=1, w=2 and c_i = 2+i.

    S = {u, v, w} and {c_1..c_6} are both independent; c_1, c_2 see {v, w},
    c_3, c_4 see {u, w} and c_5, c_6 see {u, v}.
    """
    u, v, w = 0, 1, 2
    attach = {3: (v, w), 4: (v, w), 5: (u, w), 6: (u, w), 7: (u, v), 8: (u, v)}
    return Graph.from_edges(9, [(c, s) for c, pair in attach.items() for s in pair])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    _need(a.n + b.n <= MAX_VERTICES, "union exceeds the vertex cap")
    return Graph(a.n + b.n, list(a.adj) + [row << a.n for row in b.adj])


def add_universal_vertex(g: Graph) -> Graph:
    """Join a new vertex ``g.n`` to every existing vertex."""
    _need(g.n + 1 <= MAX_VERTICES, "universal vertex exceeds the vertex cap")
    new = g.n
    return Graph(g.n + 1, [row | (1 << new) for row in g.adj] + [g.full])


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


_NAMED = {
    "complete": (complete, 1),
    "empty": (empty, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cocktail_party": (cocktail_party, 1),
    "triple_isolated": (triple_isolated, 0),
    "fig1_nine_vertex": (fig1_nine_vertex, 0),
}


def named_constructions() -> list[str]:
    return sorted(_NAMED) + ["add_universal_vertex", "disjoint_union"]


def construct_named(name: str, *params) -> Graph:
    """Build a named graph.

    Integer families take integer parameters (``construct_named("cycle", 5)``);
    ``disjoint_union`` takes two graphs and ``add_universal_vertex`` one.
    """
    if name == "disjoint_union":
        _need(len(params) == 2 and all(isinstance(p, Graph) for p in params),
              "disjoint_union takes two graphs")
        return disjoint_union(*params)
    if name == "add_universal_vertex":
        _need(len(params) == 1 and isinstance(params[0], Graph),
              "add_universal_vertex takes one graph")
        return add_universal_vertex(params[0])
    try:
        builder, arity = _NAMED[name]
    except KeyError:
        raise GraphError(f"unknown construction {name!r}") from None
    if len(params) != arity:
        raise GraphError(f"{name} takes {arity} parameter(s), got {len(params)}")
    try:
        values = [int(p) for p in params]
    except (TypeError, ValueError):
        raise GraphError(f"{name} takes integer parameters") from None
    return builder(*values)
