"""Exact domination number, minimum dominating set families and criticality.

Everything works on closed neighbourhood bitmasks restricted to a
``universe`` mask, so ``G - v`` is handled without building a subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, VertexSet, bits, to_list


class DominationError(ValueError):
    pass


def _closed(g: Graph) -> list[int]:
    return [row | (1 << v) for v, row in enumerate(g.adj)]


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = s
    for v in bits(s):
        covered |= g.adj[v]
    return covered & g.full == g.full


def _greedy(closed: list[int], universe: int) -> list[int]:
    uncovered = universe
    chosen = []
    while uncovered:
        best_v, best_c = -1, -1
        for v in bits(universe):
            c = (closed[v] & uncovered).bit_count()
            if c > best_c:
                best_v, best_c = v, c
        chosen.append(best_v)
        uncovered &= ~closed[best_v]
    return chosen


def _branch_vertex(closed: list[int], universe: int, uncovered: int, allowed: int) -> tuple[int, int]:
    """Uncovered vertex with the fewest candidate dominators (lowest index on ties)."""
    best_u, best_cand, best_size = -1, 0, 1 << 30
    m = uncovered
    while m:
        low = m & -m
        m ^= low
        cand = closed[low.bit_length() - 1] & allowed
        size = cand.bit_count()
        if size < best_size:
            best_u, best_cand, best_size = low.bit_length() - 1, cand, size
            if size <= 1:
                break
    return best_u, best_cand


def _min_dominating(closed: list[int], universe: int) -> tuple[int, int]:
    """Minimum dominating set of ``universe`` using vertices of ``universe``."""
    if not universe:
        return 0, 0
    greedy = _greedy(closed, universe)
    best = [len(greedy), 0]
    for v in greedy:
        best[1] |= 1 << v
    verts = to_list(universe)

    def search(uncovered: int, chosen: int, count: int) -> None:
        if not uncovered:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        if count + 1 >= best[0]:
            return
        need = uncovered.bit_count()
        maxcov = 0
        for v in verts:
            c = (closed[v] & uncovered).bit_count()
            if c > maxcov:
                maxcov = c
        if count + -(-need // maxcov) >= best[0]:
            return
        _, cand = _branch_vertex(closed, universe, uncovered, universe)
        order = sorted(bits(cand), key=lambda w: (-(closed[w] & uncovered).bit_count(), w))
        for w in order:
            search(uncovered & ~closed[w], chosen | (1 << w), count + 1)

    search(universe, 0, 0)
    return best[0], best[1]


def _has_dominating(closed: list[int], universe: int, k: int) -> bool:
    """Whether ``universe`` has a dominating set of size at most ``k``."""

    def search(uncovered: int, budget: int) -> bool:
        if not uncovered:
            return True
        if budget == 0:
            return False
        _, cand = _branch_vertex(closed, universe, uncovered, universe)
        for w in bits(cand):
            if search(uncovered & ~closed[w], budget - 1):
                return True
        return False

    return search(universe, k)


def _dominating_sets_upto(closed: list[int], universe: int, k: int) -> list[int]:
    """All dominating sets of ``universe`` of size <= k, provided none is smaller
    than the minimum (i.e. with ``k`` equal to the domination number they are
    exactly the minimum dominating sets, each produced once)."""
    out: list[int] = []

    def search(uncovered: int, chosen: int, budget: int, excluded: int) -> None:
        if not uncovered:
            out.append(chosen)
            return
        if budget == 0:
            return
        _, cand = _branch_vertex(closed, universe, uncovered, universe & ~excluded)
        for w in bits(cand):
            search(uncovered & ~closed[w], chosen | (1 << w), budget - 1, excluded)
            excluded |= 1 << w

    search(universe, 0, k, 0)
    return sorted(set(out), key=to_list)


@dataclass(frozen=True)
class DominationReport:
    gamma: int
    witness: VertexSet
    all_minimum: tuple[VertexSet, ...] | None = None

    def to_json(self) -> dict:
        out = {"gamma": self.gamma, "witness": to_list(self.witness)}
        if self.all_minimum is not None:
            out["all_minimum"] = [to_list(s) for s in self.all_minimum]
        return out


def domination_number(g: Graph, enumerate_all: bool = False) -> DominationReport:
    closed = _closed(g)
    gamma, witness = _min_dominating(closed, g.full)
    everything = None
    if enumerate_all:
        everything = tuple(_dominating_sets_upto(closed, g.full, gamma))
    return DominationReport(gamma, witness, everything)


def gamma(g: Graph) -> int:
    return _min_dominating(_closed(g), g.full)[0]


def dv_sets(g: Graph, v: int, gamma_g: int | None = None) -> list[VertexSet]:
    """Every dominating set of ``G - v`` with ``gamma(G) - 1`` vertices."""
    if gamma_g is None:
        gamma_g = gamma(g)
    return _dominating_sets_upto(_closed(g), g.full & ~(1 << v), gamma_g - 1)


def is_vertex_critical(g: Graph, gamma_g: int | None = None) -> bool:
    """Fast predicate form of :func:`is_gamma_vertex_critical`."""
    closed = _closed(g)
    if gamma_g is None:
        gamma_g = _min_dominating(closed, g.full)[0]
    full = g.full
    return all(_has_dominating(closed, full & ~(1 << v), gamma_g - 1) for v in range(g.n))


# -- criticality certificate --------------------------------------------------


def _sdr(families: dict[int, list[VertexSet]]) -> dict[int, VertexSet] | None:
    """Distinct representative per vertex (augmenting paths), or None."""
    owner: dict[VertexSet, int] = {}

    def assign(v: int, visited: set) -> bool:
        for s in families[v]:
            if s in visited:
                continue
            visited.add(s)
            if s not in owner or assign(owner[s], visited):
                owner[s] = v
                return True
        return False

    for v in sorted(families):
        if not assign(v, set()):
            return None
    return {v: s for s, v in owner.items()}


@dataclass
class FactsReport:
    f1: bool
    f2: bool
    f3: bool
    f3_strict: bool
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.f1 and self.f2 and self.f3

    def to_json(self) -> dict:
        return {"f1": self.f1, "f2": self.f2, "f3": self.f3, "f3_strict": self.f3_strict,
                "counterexamples": self.counterexamples}


@dataclass
class CriticalityCertificate:
    gamma: int
    is_vertex_critical: bool
    dv: dict[int, list[VertexSet]]
    facts: FactsReport | None = None
    representatives: dict[int, VertexSet] | None = None

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "is_vertex_critical": self.is_vertex_critical,
            "dv": {str(v): [to_list(s) for s in sets] for v, sets in sorted(self.dv.items())},
            "facts": self.facts.to_json() if self.facts else None,
        }


def check_facts(g: Graph, dv: dict[int, list[VertexSet]]) -> tuple[FactsReport, dict | None]:
    """Facts 1-3 for a 3-critical graph given its full D_v families.

    Fact 3 is certified as representative-choosability (a system of distinct
    D_v exists); ``f3_strict`` records the stronger pairwise-disjoint reading.
    """
    bad: list = []
    f1 = f2 = True
    for v, sets in sorted(dv.items()):
        for s in sets:
            if s.bit_count() != 2:
                f1 = False
                bad.append({"fact": 1, "vertex": v, "set": to_list(s)})
            if s & g.closed_nbhd(v):
                f2 = False
                bad.append({"fact": 2, "vertex": v, "set": to_list(s)})
    reps = _sdr(dv)
    f3 = reps is not None
    if not f3:
        bad.append({"fact": 3, "vertices": sorted(dv)})
    strict = True
    for v, w in combinations(sorted(dv), 2):
        common = set(dv[v]) & set(dv[w])
        if common:
            strict = False
            bad.append({"fact": "3-strict", "vertices": [v, w],
                        "sets": [to_list(s) for s in sorted(common)]})
    return FactsReport(f1, f2, f3, strict, bad), reps


def is_gamma_vertex_critical(g: Graph) -> CriticalityCertificate:
    closed = _closed(g)
    gamma_g = _min_dominating(closed, g.full)[0]
    dv = {v: _dominating_sets_upto(closed, g.full & ~(1 << v), gamma_g - 1) for v in range(g.n)}
    critical = all(dv.values())
    cert = CriticalityCertificate(gamma_g, critical, dv)
    if critical and gamma_g == 3:
        cert.facts, cert.representatives = check_facts(g, dv)
    return cert


def is_gamma_edge_critical(g: Graph) -> bool:
    """True iff adding any missing edge lowers gamma (vacuous for complete graphs)."""
    closed = _closed(g)
    gamma_g = _min_dominating(closed, g.full)[0]
    for u in range(g.n):
        for v in bits(g.full & ~closed[u] & ~((1 << (u + 1)) - 1)):
            plus = list(closed)
            plus[u] |= 1 << v
            plus[v] |= 1 << u
            if not _has_dominating(plus, g.full, gamma_g - 1):
                return False
    return True


def dv_pair_graph(g: Graph, s: VertexSet, sources: VertexSet) -> Graph:
    """Graph on ``s`` (ascending order) with uv an edge iff {u, v} is some D_x, x in sources."""
    closed = _closed(g)
    gamma_g = _min_dominating(closed, g.full)[0]
    if gamma_g != 3:
        raise DominationError(f"D_v pair graph needs gamma = 3, got {gamma_g}")
    verts = to_list(s)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for x in bits(sources):
        for pair in _dominating_sets_upto(closed, g.full & ~(1 << x), 2):
            if pair.bit_count() == 2 and pair & ~s == 0:
                a, b = (index[v] for v in bits(pair))
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(len(verts), adj, check=False)
