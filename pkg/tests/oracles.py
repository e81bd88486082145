"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here shares code with the package beyond the Graph container.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from domcrit.graph import Graph


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_graphs(seed: int, count: int, min_n: int, max_n: int, odd_only: bool = False):
    rng = random.Random(seed)
    sizes = [n for n in range(min_n, max_n + 1) if n % 2 or not odd_only]
    return [random_graph(rng, rng.choice(sizes)) for _ in range(count)]


def all_labelled(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


# -- graph6 ---------------------------------------------------------------------

def literal_decode(text: str) -> tuple[int, set[tuple[int, int]]]:
    """Decoder written straight from the format description, n <= 62 only."""
    data = [ord(c) - 63 for c in text.strip()]
    n = data[0]
    bitstring = "".join(format(x, "06b") for x in data[1:])
    edges, k = set(), 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[k] == "1":
                edges.add((i, j))
            k += 1
    return n, edges


# -- components -----------------------------------------------------------------

def components(g: Graph, removed: set[int] = frozenset()) -> list[set[int]]:
    seen, out = set(removed), []
    for start in range(g.n):
        if start in seen:
            continue
        comp, stack = set(), [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.add(v)
            for u in range(g.n):
                if g.has_edge(v, u) and u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(comp)
    return out


def odd_count(g: Graph, removed=frozenset()) -> int:
    return sum(len(c) % 2 for c in components(g, set(removed)))


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# -- domination -----------------------------------------------------------------

def dominates(g: Graph, s, universe=None) -> bool:
    universe = range(g.n) if universe is None else universe
    return all(v in s or any(g.has_edge(v, u) for u in s) for v in universe)


def brute_gamma(g: Graph, removed: int | None = None) -> int:
    verts = [v for v in range(g.n) if v != removed]
    for k in range(len(verts) + 1):
        if any(dominates(g, set(s), verts) for s in combinations(verts, k)):
            return k
    return len(verts)


def brute_min_dominating_sets(g: Graph, removed: int | None = None) -> list[frozenset[int]]:
    verts = [v for v in range(g.n) if v != removed]
    k = brute_gamma(g, removed)
    return [frozenset(s) for s in combinations(verts, k) if dominates(g, set(s), verts)]


def brute_vertex_critical(g: Graph) -> bool:
    gm = brute_gamma(g)
    return all(brute_gamma(g, v) < gm for v in range(g.n))


# -- matching -------------------------------------------------------------------

def brute_nu(g: Graph) -> int:
    edges = g.edges()

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        out = best(i + 1, used)
        if not (used >> u & 1 or used >> v & 1):
            out = max(out, 1 + best(i + 1, used | 1 << u | 1 << v))
        return out

    return best(0, 0)


def brute_deficiency(g: Graph) -> int:
    """max over S of c_o(G-S) - |S|, by subset search."""
    best = 0
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            best = max(best, odd_count(g, s) - k)
    return best


def has_subset_witness(g: Graph, surplus: int) -> bool:
    return any(odd_count(g, s) - k >= surplus
               for k in range(g.n + 1) for s in combinations(range(g.n), k))


def brute_gallai_edmonds(g: Graph) -> tuple[set[int], set[int], set[int]]:
    nu = brute_nu(g)
    d = {v for v in range(g.n) if brute_nu(g.delete(1 << v)) == nu}
    a = {u for u in range(g.n) if u not in d and any(g.has_edge(u, v) for v in d)}
    c = set(range(g.n)) - d - a
    return d, a, c


# -- isomorphism and structure --------------------------------------------------

def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    ea = set(a.edges())
    for perm in permutations(range(a.n)):
        if {tuple(sorted((perm[u], perm[v]))) for u, v in ea} == set(b.edges()):
            return True
    return False


def brute_star_free(g: Graph, k: int) -> bool:
    for v in range(g.n):
        nb = [u for u in range(g.n) if g.has_edge(u, v)]
        for leaves in combinations(nb, k):
            if not any(g.has_edge(x, y) for x, y in combinations(leaves, 2)):
                return False
    return True


def brute_connectivity(g: Graph) -> int:
    if all(g.has_edge(u, v) for u, v in combinations(range(g.n), 2)):
        return g.n - 1
    for k in range(g.n):
        for cut in combinations(range(g.n), k):
            if len(components(g, set(cut))) > 1:
                return k
    return g.n - 1
