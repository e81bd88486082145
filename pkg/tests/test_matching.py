from __future__ import annotations

import json
import random
from itertools import combinations

import pytest

from domcrit.enumeration import enumerate_upto
from domcrit.graph import (add_universal_vertex, bits, complete, complete_bipartite, component_masks, cycle,
                           fig1_nine_vertex, star, vset)
from domcrit.matching import (MatchingError, deficiency, has_near_perfect_matching, has_perfect_matching,
                              is_bicritical, is_factor_critical, maximum_matching, near_pm_witness,
                              tutte_witness)
import oracles


def _check_report(g, rep):
    used = 0
    for u, v in rep.matching:
        assert g.has_edge(u, v) and u < v
        assert not used >> u & 1 and not used >> v & 1
        used |= 1 << u | 1 << v
    assert list(rep.matching) == sorted(rep.matching)
    assert rep.nu == len(rep.matching)
    assert rep.deficiency == g.n - 2 * rep.nu >= 0


def test_examples():
    r = maximum_matching(cycle(9))
    assert (r.nu, r.deficiency) == (4, 1)
    r = maximum_matching(complete(4))
    assert (r.nu, r.deficiency) == (2, 0)
    r = maximum_matching(fig1_nine_vertex())
    assert (r.nu, r.deficiency) == (3, 3)


def test_predicate_examples():
    assert has_perfect_matching(cycle(4))
    assert not has_perfect_matching(star(3))
    assert not has_near_perfect_matching(fig1_nine_vertex())
    assert not has_near_perfect_matching(cycle(4))      # even order
    assert is_factor_critical(cycle(5))
    assert not is_factor_critical(cycle(4))
    assert not is_factor_critical(fig1_nine_vertex())
    assert is_bicritical(complete(4))
    assert not is_bicritical(cycle(6))
    assert not is_bicritical(complete_bipartite(3, 3))


def test_nu_against_brute_force_exhaustive():
    for g in enumerate_upto(7):
        rep = maximum_matching(g)
        _check_report(g, rep)
        assert rep.nu == oracles.brute_nu(g)


def test_nu_against_brute_force_random():
    rng = random.Random(21)
    for _ in range(1000):
        g = oracles.random_graph(rng, rng.randint(1, 14))
        rep = maximum_matching(g)
        _check_report(g, rep)
        assert rep.nu == oracles.brute_nu(g)
        assert rep.deficiency % 2 == g.n % 2


def test_gallai_edmonds_against_brute_force():
    rng = random.Random(22)
    for _ in range(400):
        g = oracles.random_graph(rng, rng.randint(1, 11))
        ge = maximum_matching(g).ge
        d, a, c = oracles.brute_gallai_edmonds(g)
        assert (ge.D, ge.A, ge.C) == (vset(d), vset(a), vset(c))


def test_gallai_edmonds_structure():
    rng = random.Random(23)
    for _ in range(300):
        g = oracles.random_graph(rng, rng.randint(1, 12))
        rep = maximum_matching(g)
        ge = rep.ge
        assert ge.D | ge.A | ge.C == g.full
        assert not (ge.D & ge.A or ge.D & ge.C or ge.A & ge.C)
        comps = component_masks(g, ge.D)
        assert all(is_factor_critical(g.induced(c)) for c in comps)
        if ge.C:
            assert has_perfect_matching(g.induced(ge.C))
        assert rep.deficiency == len(comps) - ge.A.bit_count()


def test_tutte_witness_examples():
    w = tutte_witness(star(3))
    assert w.s == 1 << 0 and w.deficit == 2
    w = tutte_witness(cycle(4))
    assert w.s == 0 and w.deficit == 0
    w = tutte_witness(fig1_nine_vertex())
    assert w.s == vset([0, 1, 2]) and w.deficit == 3


def test_berge_formula_by_subset_search():
    rng = random.Random(24)
    for _ in range(250):
        g = oracles.random_graph(rng, rng.randint(1, 10))
        w = tutte_witness(g)
        assert w.deficit == deficiency(g) == oracles.brute_deficiency(g)
        assert w.deficit == w.summary.odd_count - w.s.bit_count()


def test_near_pm_witness_examples():
    w = near_pm_witness(star(4))
    assert w.s == 1 << 0 and w.summary.odd_count == 4
    assert near_pm_witness(cycle(5)) is None
    w = near_pm_witness(fig1_nine_vertex())
    assert w.s == vset([0, 1, 2]) and w.summary.odd_count == 6
    doc = json.loads(json.dumps(w.to_json()))
    assert doc["s"] == [0, 1, 2] and doc["deficit"] == 3 and len(doc["odd_components"]) == 6


def test_near_pm_witness_even_order_errors():
    with pytest.raises(MatchingError):
        near_pm_witness(cycle(4))


def test_near_pm_witness_agrees_with_subset_search():
    rng = random.Random(25)
    for g in oracles.random_graphs(26, 300, 1, 11, odd_only=True):
        w = near_pm_witness(g)
        has = has_near_perfect_matching(g)
        assert has == (w is None)
        assert has == (not oracles.has_subset_witness(g, 3))
        if w is not None:
            assert oracles.odd_count(g, set(bits(w.s))) >= w.s.bit_count() + 3


def test_universal_vertex_reduction():
    for g in oracles.random_graphs(27, 200, 1, 11, odd_only=True):
        assert has_near_perfect_matching(g) == has_perfect_matching(add_universal_vertex(g))


def test_factor_critical_and_bicritical_by_definition():
    for g in enumerate_upto(6):
        fc = g.n % 2 == 1 and all(has_perfect_matching(g.delete(1 << v)) for v in range(g.n))
        assert is_factor_critical(g) == fc
        bc = g.n % 2 == 0 and g.n >= 2 and all(has_perfect_matching(g.delete(1 << u | 1 << v))
                                               for u, v in combinations(range(g.n), 2))
        assert is_bicritical(g) == bc
