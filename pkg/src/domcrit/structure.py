"""Star-freedom, vertex connectivity and the structural lemma checks for
3-critical graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .domination import _closed, _dominating_sets_upto, _min_dominating, is_vertex_critical
from .graph import Graph, VertexSet, bits, component_masks, to_list


class StructureError(ValueError):
    pass


# -- stars --------------------------------------------------------------------


@dataclass(frozen=True)
class StarWitness:
    center: int
    leaves: VertexSet

    def to_json(self) -> dict:
        return {"center": self.center, "leaves": to_list(self.leaves)}


def max_independent_set(adj, cand: int, need: int | None = None) -> int:
    """Maximum independent subset of ``cand``; stops early once ``need`` is met."""
    best = 0

    def search(cand: int, chosen: int, size: int) -> bool:
        nonlocal best
        while cand:
            # forced picks: a vertex with at most one neighbour in cand
            low_pick = 0
            m = cand
            while m:
                low = m & -m
                m ^= low
                if (adj[low.bit_length() - 1] & cand).bit_count() <= 1:
                    low_pick = low
                    break
            if not low_pick:
                break
            chosen |= low_pick
            size += 1
            cand &= ~low_pick & ~adj[low_pick.bit_length() - 1]
        if not cand:
            if size > best.bit_count():
                best = chosen
            return need is not None and size >= need
        if size + cand.bit_count() <= best.bit_count():
            return False
        v, top = -1, -1
        for u in bits(cand):
            d = (adj[u] & cand).bit_count()
            if d > top:
                v, top = u, d
        if search(cand & ~(1 << v) & ~adj[v], chosen | (1 << v), size + 1):
            return True
        return search(cand & ~(1 << v), chosen, size)

    search(cand, 0, 0)
    return best


def star_witness(g: Graph, k: int) -> StarWitness | None:
    """An induced K_{1,k}, or None when the graph is K_{1,k}-free."""
    if k < 2:
        raise StructureError("star bound k must be at least 2")
    for v in range(g.n):
        nb = g.adj[v]
        if nb.bit_count() < k:
            continue
        ind = max_independent_set(g.adj, nb, need=k)
        if ind.bit_count() >= k:
            leaves = 0
            for u in list(bits(ind))[:k]:
                leaves |= 1 << u
            return StarWitness(v, leaves)
    return None


def is_star_free(g: Graph, k: int) -> tuple[bool, StarWitness | None]:
    w = star_witness(g, k)
    return w is None, w


def max_star_leaves(g: Graph) -> int:
    """Largest k such that G contains an induced K_{1,k} (0 for edgeless graphs)."""
    return max((max_independent_set(g.adj, row).bit_count() for row in g.adj), default=0)


# -- connectivity -------------------------------------------------------------


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent), at most ``cap``.

    Unit-capacity flow on the split graph: vertex x becomes x_in = 2x and
    x_out = 2x + 1.
    """
    n = g.n
    residual: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in residual:
            out[a].append(b)
            out[b].append(a)
            residual[(b, a)] = residual.get((b, a), 0)
        residual[(a, b)] = residual.get((a, b), 0) + c

    big = n
    for x in range(n):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
        for y in bits(g.adj[x]):
            arc(2 * x + 1, 2 * y, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out[a]:
                if b not in prev and residual[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete():
        return n - 1
    if len(component_masks(g, g.full)) > 1:
        return 0
    best = g.min_degree()
    for s in range(n):
        for t in range(s + 1, n):
            if g.adj[s] >> t & 1:
                continue
            best = min(best, _local_connectivity(g, s, t, best))
            if best == 0:
                return 0
    return best


# -- lemma checks -------------------------------------------------------------


def _require_3_critical(g: Graph) -> None:
    closed = _closed(g)
    gamma_g = _min_dominating(closed, g.full)[0]
    if gamma_g != 3 or not is_vertex_critical(g, gamma_g):
        raise StructureError("graph is not 3-gamma-vertex-critical")


def is_k_critical(g: Graph, k: int) -> bool:
    gamma_g = _min_dominating(_closed(g), g.full)[0]
    return gamma_g == k and is_vertex_critical(g, gamma_g)


@dataclass
class Clause:
    applicable: bool = False
    passed: bool = True
    offending: list = field(default_factory=list)

    def fail(self, item) -> None:
        self.passed = False
        self.offending.append(item)

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "pass": self.passed, "offending": self.offending}


@dataclass
class CutLemmaVerdict:
    disconnected: Clause
    cut_vertex: Clause
    two_cut: Clause

    @property
    def ok(self) -> bool:
        return self.disconnected.passed and self.cut_vertex.passed and self.two_cut.passed

    def to_json(self) -> dict:
        return {"ok": self.ok, "disconnected": self.disconnected.to_json(),
                "cut_vertex": self.cut_vertex.to_json(), "two_cut": self.two_cut.to_json()}


def cut_lemma_check(g: Graph) -> CutLemmaVerdict:
    """Check the three cut clauses on a 3-gamma-vertex-critical graph.

    Clauses 2 and 3 are evaluated on connected graphs; a disconnected graph is
    covered by clause 1 alone.
    """
    _require_3_critical(g)
    comps = component_masks(g, g.full)
    c1, c2, c3 = Clause(), Clause(), Clause()
    if len(comps) > 1:
        c1.applicable = True
        isolated = [v for v in range(g.n) if not g.adj[v]]
        if not any(is_k_critical(g.delete(1 << x), 2) for x in isolated):
            c1.fail([to_list(c) for c in comps])
        return CutLemmaVerdict(c1, c2, c3)

    for u in range(g.n):
        rest = component_masks(g, g.full & ~(1 << u))
        if len(rest) < 2:
            continue
        c2.applicable = True
        if len(rest) != 2:
            c2.fail({"vertex": u, "components": len(rest)})
            continue
        for c in rest:
            if not is_k_critical(g.induced(c | 1 << u), 2):
                c2.fail({"vertex": u, "side": to_list(c)})

    for a, b in combinations(range(g.n), 2):
        rest = component_masks(g, g.full & ~(1 << a | 1 << b))
        if len(rest) < 2:
            continue
        c3.applicable = True
        if len(rest) > 3:
            c3.fail({"cut": [a, b], "components": len(rest)})
        elif len(rest) == 3 and not any(c.bit_count() == 1 for c in rest):
            c3.fail({"cut": [a, b], "components": 3, "singleton": False})
    return CutLemmaVerdict(c1, c2, c3)


@dataclass
class Degree1Verdict:
    status: str                     # "pass", "fail" or "hypothesis-not-met"
    offending: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"status": self.status, "offending": self.offending}


def degree1_lemma_check(g: Graph, s: VertexSet, strict: bool = False) -> Degree1Verdict:
    """If every u in s has a D_u inside s, G[s] has no vertex of degree one.

    The default reads "D_u inside s" as *some* minimum dominating set of
    G - u; ``strict`` requires *every* one to lie inside s.
    """
    _require_3_critical(g)
    closed = _closed(g)
    missing = []
    for u in bits(s):
        fam = _dominating_sets_upto(closed, g.full & ~(1 << u), 2)
        inside = [d for d in fam if not d & ~s]
        ok = len(inside) == len(fam) if strict else bool(inside)
        if not ok:
            missing.append(u)
    if missing:
        return Degree1Verdict("hypothesis-not-met", missing)
    bad = [u for u in bits(s) if (g.adj[u] & s).bit_count() == 1]
    return Degree1Verdict("fail" if bad else "pass", bad)


@dataclass(frozen=True)
class TriangleReport:
    triangle_free: bool
    edges: int
    mantel_bound: int


def is_triangle_free(g: Graph) -> TriangleReport:
    free = True
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            if g.adj[u] & g.adj[v]:
                free = False
                break
        if not free:
            break
    m = g.edge_count()
    bound = g.n * g.n // 4
    if free and m > bound:
        raise StructureError(f"triangle-free graph with {m} > {bound} edges")
    return TriangleReport(free, m, bound)
