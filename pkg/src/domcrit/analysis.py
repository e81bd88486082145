"""Minimal deficiency witnesses of 3-critical graphs without the expected
perfect or near-perfect matching."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .domination import _closed, _dominating_sets_upto
from .graph import ComponentSummary, Graph, VertexSet, bits, components_after_deletion, to_list
from .matching import tutte_witness
from .structure import is_k_critical


class AnalysisError(ValueError):
    pass


class InconsistencyError(AssertionError):
    """A property that holds for every valid input failed; indicates a bug."""


def required_surplus(n: int) -> int:
    """c_o(G-S) - |S| needed to rule out a perfect (even n) or near-perfect (odd n) matching."""
    return 3 if n % 2 else 2


def _surplus(g: Graph, s: VertexSet) -> int:
    return components_after_deletion(g, s).odd_count - s.bit_count()


def shrink_witness(g: Graph, s: VertexSet, need: int) -> VertexSet:
    """Drop vertices in ascending order while the surplus stays >= need, to a fixpoint."""
    changed = True
    while changed:
        changed = False
        for v in bits(s):
            if _surplus(g, s & ~(1 << v)) >= need:
                s &= ~(1 << v)
                changed = True
    return s


@dataclass(frozen=True)
class WitnessAnalysis:
    s: VertexSet
    summary: ComponentSummary
    attachments: tuple[VertexSet, ...]     # S_i for each odd component, same order
    d: int
    first_min: int                         # index i with |S_i| = d, lowest
    normal_pairs: tuple[VertexSet, ...]
    odd_neighbours: dict[int, int]         # vertex of S -> odd components it touches

    @property
    def normal_bound(self) -> int:
        k = self.s.bit_count()
        return comb(k, 2) - comb(k - self.d, 2)

    def to_json(self) -> dict:
        return {
            "s": to_list(self.s),
            "odd_components": [to_list(c) for c in self.summary.odd_components],
            "even_components": [to_list(c) for c in self.summary.even_components],
            "attachments": [to_list(a) for a in self.attachments],
            "d": self.d,
            "normal_pairs": [to_list(p) for p in self.normal_pairs],
            "normal_bound": self.normal_bound,
            "odd_neighbours": {str(v): c for v, c in sorted(self.odd_neighbours.items())},
        }


def minimal_witness_analysis(g: Graph) -> WitnessAnalysis:
    if not is_k_critical(g, 3):
        raise AnalysisError("graph is not 3-gamma-vertex-critical")
    need = required_surplus(g.n)
    start = tutte_witness(g)
    if start.deficit < need:
        raise AnalysisError("graph has the expected perfect / near-perfect matching")
    s = shrink_witness(g, start.s, need)
    for v in bits(s):
        if _surplus(g, s & ~(1 << v)) >= need:
            raise InconsistencyError(f"witness not minimal: {v} removable")

    summary = components_after_deletion(g, s)
    odd = summary.odd_components
    attachments = tuple(g.neighbours_of(c) & s for c in odd)
    touching = {v: sum(1 for c in odd if g.adj[v] & c) for v in bits(s)}
    short = [v for v, c in touching.items() if c < 3]
    if short:
        raise InconsistencyError(f"vertices {short} touch fewer than three odd components")

    if attachments:
        d = min(a.bit_count() for a in attachments)
        first = next(i for i, a in enumerate(attachments) if a.bit_count() == d)
        s1, c1 = attachments[first], odd[first]
    else:
        d, first, s1, c1 = 0, -1, 0, 0
    closed = _closed(g)
    realised = set()
    for x in bits(g.full & ~c1):
        for pair in _dominating_sets_upto(closed, g.full & ~(1 << x), 2):
            if pair.bit_count() == 2 and not pair & ~s and pair & s1:
                realised.add(pair)
    analysis = WitnessAnalysis(s, summary, attachments, d, first,
                               tuple(sorted(realised, key=to_list)), touching)
    if len(analysis.normal_pairs) > analysis.normal_bound:
        raise InconsistencyError("more normal pairs than the counting bound allows")
    return analysis


def realised_pairs(g: Graph, s: VertexSet, sources: VertexSet) -> set[VertexSet]:
    """2-subsets of s that occur as some D_x with x in sources."""
    closed = _closed(g)
    out = set()
    for x in bits(sources):
        for pair in _dominating_sets_upto(closed, g.full & ~(1 << x), 2):
            if pair.bit_count() == 2 and not pair & ~s:
                out.add(pair)
    return out


def all_pairs(s: VertexSet) -> set[VertexSet]:
    return {1 << a | 1 << b for a, b in combinations(to_list(s), 2)}
