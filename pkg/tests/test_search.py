from __future__ import annotations

from domcrit.analysis import all_pairs
from domcrit.canon import canonical_form
from domcrit.domination import check_facts, domination_number, dv_pair_graph, dv_sets
from domcrit.graph import components_after_deletion, fig1_nine_vertex, vset
from domcrit.matching import deficiency, has_near_perfect_matching, has_perfect_matching
from domcrit.search import case_3_2_graph, cubic_graphs_on_six, known_odd_exceptions
from domcrit.structure import is_k_critical, is_star_free


def test_case_1_2(case_results):
    res, _ = case_results["case1.2"]
    assert [canonical_form(g) for g in res.graphs] == [canonical_form(fig1_nine_vertex())]
    g = res.graphs[0]
    assert is_star_free(g, 5)[0] and deficiency(g) == 3


def test_case_3_2(case_results):
    for k, order, odd in [(6, 12, 7), (7, 13, 8)]:
        res, _ = case_results[f"case3.2:{k}"]
        assert res.graphs
        for g in res.graphs:
            assert g.n == order and is_k_critical(g, 3) and is_star_free(g, k)[0]
            assert not (has_perfect_matching(g) if k == 6 else has_near_perfect_matching(g))
        # the skeleton witness S = s_1..s_5, recounted on an uncanonised member
        g = case_3_2_graph(k, [0] * (k - 1))
        assert components_after_deletion(g, vset(range(5))).odd_count == odd
    assert res.counts["found"] == len(res.graphs)


def test_case_3_2_witness_on_outputs(case_results):
    for k, odd in [(6, 7), (7, 8)]:
        for g in case_results[f"case3.2:{k}"][0].graphs:
            hits = [s for s in _five_sets(g.n) if components_after_deletion(g, s).odd_count == odd]
            assert hits


def _five_sets(n):
    from itertools import combinations
    return (vset(c) for c in combinations(range(n), 5))


def test_cubic_skeletons():
    assert len(cubic_graphs_on_six()) == 2


def test_case_4_2(case_results):
    res, _ = case_results["case4.2"]
    assert len(res.graphs) == 2
    assert len({canonical_form(g) for g in res.graphs}) == 2
    for g in res.graphs:
        assert g.n == 15 and domination_number(g).gamma == 3 and deficiency(g) >= 3
        assert is_k_critical(g, 3) and is_star_free(g, 7)[0] and not has_near_perfect_matching(g)
        s = next(x for x in _six_sets(g) if all(g.degree(v) == 4 and not g.adj[v] & ~x
                                                 for v in range(15) if not x >> v & 1))
        h = dv_pair_graph(g, s, g.full)
        assert h.edge_count() == 15
        dv = {v: dv_sets(g, v) for v in range(g.n)}
        facts, reps = check_facts(g, dv)
        assert facts.ok and len(set(reps.values())) == 15 == len(all_pairs(s))


def _six_sets(g):
    from itertools import combinations
    return (vset(c) for c in combinations(range(g.n), 6))


def test_known_exceptions():
    assert canonical_form(fig1_nine_vertex()) in known_odd_exceptions()
    assert len(known_odd_exceptions()) == 3
