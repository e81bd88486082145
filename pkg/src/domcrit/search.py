"""Constraint searches that rebuild the exceptional graphs from the
skeletons pinned down by the case analysis (|S| = 3, 5 and 6)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .analysis import all_pairs, realised_pairs
from .canon import canonical_form, canonical_graph
from .domination import dv_sets
from .enumeration import enumerate_graphs
from .graph import Graph, fig1_nine_vertex, vset
from .matching import has_near_perfect_matching, has_perfect_matching
from .structure import is_k_critical, star_witness


@dataclass
class SearchResult:
    name: str
    graphs: list[Graph] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        from .graph6 import to_graph6
        return {"search": self.name, "counts": self.counts,
                "graphs": [to_graph6(g) for g in self.graphs]}


def _dedup(graphs) -> dict[str, Graph]:
    out: dict[str, Graph] = {}
    for g in graphs:
        out.setdefault(canonical_form(g), g)
    return out


def _finish(name: str, pool: dict[str, Graph], counts: dict[str, int], keep) -> SearchResult:
    counts["distinct"] = len(pool)
    graphs = [canonical_graph(pool[key]) for key in sorted(pool) if keep(pool[key])]
    counts["found"] = len(graphs)
    return SearchResult(name, graphs, counts)


# -- |S| = 3 --------------------------------------------------------------------

def run_case_1_2() -> SearchResult:
    """S = {u, v, w} independent, six singleton components each seeing two of S."""
    u, v, w = 0, 1, 2
    cs = list(range(3, 9))
    pairs = [(v, w), (u, w), (u, v)]
    # D_{c1} = {u, c2}, D_{c2} = {u, c1}, D_{c3} = {v, c4}, ... as forced by the case
    d_system = {3: (u, 4), 4: (u, 3), 5: (v, 6), 6: (v, 5), 7: (w, 8), 8: (w, 7)}
    counts = {"candidates": 0, "d_system": 0}
    kept = []
    for choice in product(range(3), repeat=6):
        counts["candidates"] += 1
        g = Graph.from_edges(9, [(c, s) for c, k in zip(cs, choice) for s in pairs[k]])
        if all(vset(d_system[c]) in dv_sets(g, c, 3) for c in cs):
            counts["d_system"] += 1
            kept.append(g)
    return _finish("case1.2", _dedup(kept), counts,
                   lambda g: is_k_critical(g, 3) and not has_near_perfect_matching(g))


def reconstruct_case_1_2() -> list[Graph]:
    return run_case_1_2().graphs


# -- |S| = 5, G[S] = C4 + K1 ------------------------------------------------------

def case_3_2_graph(k: int, rows) -> Graph:
    """Skeleton graph: s1..s4 = 0..3 on a 4-cycle, s5 = 4, c1, c2 = 5, 6 and
    c3..c_{k+1} = 7.. with ``rows`` giving each one's neighbours in {s1..s4}."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(c, s) for c in (5, 6) for s in range(4)]
    for j, row in enumerate(rows):
        c = 7 + j
        edges.append((c, 4))
        edges += [(c, s) for s in range(4) if row >> s & 1]
    return Graph.from_edges(5 + k + 1, edges)


def run_case_3_2(k: int) -> SearchResult:
    if k not in (6, 7):
        raise ValueError("case 3.2 search takes k = 6 or 7")
    counts = {"candidates": 0, "star_free": 0, "deficient": 0, "critical": 0}
    kept = []
    for rows in combinations_with_replacement(range(16), k - 1):
        counts["candidates"] += 1
        g = case_3_2_graph(k, rows)
        if star_witness(g, k) is not None:
            continue
        counts["star_free"] += 1
        if (has_perfect_matching(g) if k == 6 else has_near_perfect_matching(g)):
            continue
        counts["deficient"] += 1
        if not is_k_critical(g, 3):
            continue
        counts["critical"] += 1
        kept.append(g)
    return _finish(f"case3.2:{k}", _dedup(kept), counts, lambda g: True)


def reconstruct_case_3_2(k: int) -> list[Graph]:
    return run_case_3_2(k).graphs


# -- |S| = 6, G[S] cubic ----------------------------------------------------------

def cubic_graphs_on_six() -> list[Graph]:
    return [g for g in enumerate_graphs(6) if all(row.bit_count() == 3 for row in g.adj)]


def run_case_4_2() -> SearchResult:
    """S = 0..5 with G[S] cubic; nine independent outside vertices 6..14, each
    joined to exactly four vertices of S.

    An outside vertex x joined to S minus {a, b} can only have D_x = {a, b};
    a vertex s of S has D_s = S minus N[s].  Distinct D-sets are required,
    which prunes the row search.
    """
    full_s = (1 << 6) - 1
    options = sorted(full_s & ~p for p in all_pairs(full_s))
    counts = {"skeletons": 0, "nodes": 0, "candidates": 0, "all_pairs": 0}
    kept = []
    for base in cubic_graphs_on_six():
        counts["skeletons"] += 1
        claimed = {full_s & ~(base.adj[s] | 1 << s) for s in range(6)}

        def extend(rows: list[int], start: int, used: set):
            counts["nodes"] += 1
            if len(rows) == 9:
                yield list(rows)
                return
            for i in range(start, len(options)):
                pair = full_s & ~options[i]
                if pair in used:
                    continue
                rows.append(options[i])
                used.add(pair)
                yield from extend(rows, i, used)
                used.discard(pair)
                rows.pop()

        for rows in extend([], 0, set(claimed)):
            counts["candidates"] += 1
            edges = base.edges() + [(6 + j, s) for j, row in enumerate(rows) for s in range(6) if row >> s & 1]
            g = Graph.from_edges(15, edges)
            if realised_pairs(g, full_s, g.full) != all_pairs(full_s):
                continue
            counts["all_pairs"] += 1
            kept.append(g)

    def keep(g: Graph) -> bool:
        return (is_k_critical(g, 3) and star_witness(g, 7) is None
                and not has_near_perfect_matching(g))

    return _finish("case4.2", _dedup(kept), counts, keep)


def reconstruct_case_4_2() -> list[Graph]:
    return run_case_4_2().graphs


@lru_cache(maxsize=None)
def known_odd_exceptions() -> frozenset[str]:
    """Canonical forms of the listed odd-order exceptions (the 9-vertex graph and
    the two 15-vertex graphs)."""
    return frozenset([canonical_form(fig1_nine_vertex())]
                     + [canonical_form(g) for g in reconstruct_case_4_2()])


SEARCHES = {
    "case1.2": run_case_1_2,
    "case3.2:6": lambda: run_case_3_2(6),
    "case3.2:7": lambda: run_case_3_2(7),
    "case4.2": run_case_4_2,
}
