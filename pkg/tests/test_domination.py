from __future__ import annotations

import json
import random

import pytest

from domcrit.domination import (DominationError, check_facts, domination_number, dv_pair_graph, dv_sets,
                                is_dominating, is_gamma_edge_critical, is_gamma_vertex_critical)
from domcrit.enumeration import enumerate_upto
from domcrit.graph import (add_universal_vertex, bits, complete, cycle, fig1_nine_vertex, star,
                           to_list, triple_isolated, vset)
import oracles

U, V, W = 0, 1, 2


def test_is_dominating_examples():
    assert is_dominating(star(5), 1 << 0)
    c9 = cycle(9)
    assert not any(is_dominating(c9, 1 << a | 1 << b) for a in range(9) for b in range(a + 1, 9))
    assert is_dominating(fig1_nine_vertex(), vset([U, V, W]))


def test_domination_number_examples():
    r = domination_number(star(5))
    assert r.gamma == 1 and r.witness == 1 << 0
    assert domination_number(cycle(9)).gamma == 3
    assert domination_number(fig1_nine_vertex()).gamma == 3


def test_report_invariants_and_enumeration():
    rng = random.Random(3)
    for _ in range(150):
        g = oracles.random_graph(rng, rng.randint(1, 9))
        r = domination_number(g, enumerate_all=True)
        assert is_dominating(g, r.witness) and r.witness.bit_count() == r.gamma
        expected = sorted(sorted(s) for s in oracles.brute_min_dominating_sets(g))
        assert sorted(to_list(s) for s in r.all_minimum) == expected


def test_gamma_against_subset_search_small():
    for g in enumerate_upto(6):
        assert domination_number(g).gamma == oracles.brute_gamma(g)


def test_dv_examples():
    assert dv_sets(cycle(4), 0) == [1 << 2]
    assert dv_sets(star(3), 0) == []
    assert dv_sets(fig1_nine_vertex(), U) == [vset([V, W])]


def test_dv_sets_against_brute_force():
    rng = random.Random(4)
    for _ in range(100):
        g = oracles.random_graph(rng, rng.randint(2, 8))
        gm = oracles.brute_gamma(g)
        for v in range(g.n):
            got = sorted(to_list(s) for s in dv_sets(g, v))
            want = sorted(sorted(s) for s in oracles.brute_min_dominating_sets(g, v)
                          if len(s) == gm - 1)
            assert got == want


def test_vertex_critical_examples():
    c = is_gamma_vertex_critical(cycle(4))
    assert c.is_vertex_critical and c.gamma == 2
    c = is_gamma_vertex_critical(triple_isolated())
    assert c.is_vertex_critical and c.gamma == 3
    assert not is_gamma_vertex_critical(cycle(9)).is_vertex_critical


def test_vertex_critical_against_brute_force():
    for g in enumerate_upto(6):
        cert = is_gamma_vertex_critical(g)
        assert cert.is_vertex_critical == oracles.brute_vertex_critical(g)
        assert cert.is_vertex_critical == all(cert.dv[v] for v in range(g.n))
        if cert.is_vertex_critical:
            # deleting a vertex drops gamma by exactly one
            assert all(oracles.brute_gamma(g, v) == cert.gamma - 1 for v in range(g.n))


def test_edge_critical_examples():
    # C_5 + chord still has gamma 2: no vertex then sees all four others
    g = cycle(5)
    assert all(oracles.brute_gamma(g.add_edge(u, (u + 2) % 5)) == 2 for u in range(5))
    assert not is_gamma_edge_critical(g)
    # either chord of C_4 makes its endpoint universal
    assert is_gamma_edge_critical(cycle(4))
    assert is_gamma_edge_critical(complete(4))


def test_edge_critical_against_brute_force():
    for g in enumerate_upto(6):
        gm = oracles.brute_gamma(g)
        non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        expected = all(oracles.brute_gamma(g.add_edge(u, v)) < gm for u, v in non_edges)
        assert is_gamma_edge_critical(g) == expected


def test_universal_vertex_gives_gamma_one():
    rng = random.Random(5)
    for _ in range(50):
        assert domination_number(add_universal_vertex(oracles.random_graph(rng, rng.randint(1, 10)))).gamma == 1


def test_fig1_certificate_json():
    cert = is_gamma_vertex_critical(fig1_nine_vertex())
    doc = json.loads(json.dumps(cert.to_json()))
    assert set(doc) == {"gamma", "is_vertex_critical", "dv", "facts"}
    assert doc["dv"]["0"] == [[1, 2]]
    assert doc["facts"]["f1"] and doc["facts"]["f2"] and doc["facts"]["f3"]
    assert cert.facts.ok and len(set(cert.representatives.values())) == 9


def test_facts_detect_bad_families():
    g = fig1_nine_vertex()
    fam = {v: dv_sets(g, v) for v in range(g.n)}
    fam[U] = [vset([V, W, 3])]
    report, _ = check_facts(g, fam)
    assert not report.f1
    fam = {0: [vset([1, 2])], 1: [vset([1, 2])]}
    report, reps = check_facts(g, fam)
    assert not report.f3 and reps is None and not report.f3_strict


def test_facts_hold_on_three_critical_graphs():
    for g in enumerate_upto(8):
        cert = is_gamma_vertex_critical(g)
        if cert.gamma == 3 and cert.is_vertex_critical:
            assert cert.facts.ok
            assert cert.facts.f3_strict
            for v in range(g.n):
                for s in cert.dv[v]:
                    assert s.bit_count() == 2 and not s & g.closed_nbhd(v)


def test_dv_pair_graph_fig1():
    g = fig1_nine_vertex()
    s = vset([U, V, W])
    h = dv_pair_graph(g, s, s)
    assert h.n == 3 and h.edge_count() == 3
    assert dv_pair_graph(g, s, 0).edge_count() == 0


def test_dv_pair_graph_requires_gamma_three():
    with pytest.raises(DominationError):
        dv_pair_graph(cycle(4), 0b11, 0b11)
