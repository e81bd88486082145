"""Corpus-level theorem checks, predicate filters and reports.

A corpus is a re-iterable stream of graphs plus the set of orders it covers
completely.  Suites look at one graph at a time and return an outcome; the
runner merges outcomes in corpus order, so reports do not depend on the
number of worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .canon import canonical_form
from .domination import _closed, _min_dominating, is_gamma_vertex_critical, is_vertex_critical
from .enumeration import GRAPH_COUNTS, enumerate_graphs
from .graph import Graph, cocktail_party, is_connected, odd_component_count
from .graph6 import parse_graph6, read_corpus, to_graph6
from .matching import deficiency, near_pm_witness, tutte_witness
from .search import known_odd_exceptions
from .structure import cut_lemma_check, degree1_lemma_check, star_witness, vertex_connectivity


class HarnessError(ValueError):
    pass


# -- corpora ------------------------------------------------------------------


@dataclass
class Corpus:
    id: str
    source: Callable[[], Iterable[Graph]]
    exhaustive_orders: frozenset[int] = frozenset()

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.source())


def exhaustive_corpus(max_n: int, min_n: int = 1, connected_only: bool = False) -> Corpus:
    def source():
        for k in range(min_n, max_n + 1):
            yield from enumerate_graphs(k, connected_only)
    tag = "connected" if connected_only else "all"
    orders = frozenset() if connected_only else frozenset(range(min_n, max_n + 1))
    return Corpus(f"exhaustive:{tag}:{min_n}-{max_n}", source, orders)


def graphs_corpus(id: str, graphs: Iterable[Graph], exhaustive_orders: Iterable[int] = ()) -> Corpus:
    items = list(graphs)
    return Corpus(id, lambda: items, frozenset(exhaustive_orders))


def complete_orders(graphs: Iterable[Graph]) -> frozenset[int]:
    """Orders at which ``graphs`` holds every isomorphism class exactly once."""
    by_order: dict[int, set[str]] = {}
    totals: dict[int, int] = {}
    for g in graphs:
        totals[g.n] = totals.get(g.n, 0) + 1
        by_order.setdefault(g.n, set()).add(canonical_form(g))
    return frozenset(n for n, forms in by_order.items()
                     if n in GRAPH_COUNTS and len(forms) == GRAPH_COUNTS[n] == totals[n])


def file_corpus(paths: list[str]) -> Corpus:
    graphs = [g for p in paths for g in read_corpus(p)]
    names = ",".join("stdin" if p == "-" else Path(p).name for p in paths)
    return graphs_corpus(f"file:{names}", graphs, complete_orders(graphs))


def random_corpus(count: int, min_n: int, max_n: int, seed: int, odd_only: bool = False) -> Corpus:
    """Seeded G(n, p) sample with n and p drawn per graph."""
    def source():
        rng = random.Random(seed)
        sizes = [m for m in range(min_n, max_n + 1) if m % 2 or not odd_only]
        if not sizes:
            raise HarnessError("no admissible order in the requested range")
        made = 0
        while made < count:
            n = rng.choice(sizes)
            p = rng.random()
            edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
            made += 1
            yield Graph.from_edges(n, edges)
    return Corpus(f"random:{count}:{min_n}-{max_n}:seed={seed}", source)


# -- per-graph cache ----------------------------------------------------------


class GraphFacts:
    """Lazily computed quantities shared by the suites for one graph."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def gamma(self) -> int:
        return _min_dominating(_closed(self.g), self.g.full)[0]

    @cached_property
    def critical(self) -> bool:
        return is_vertex_critical(self.g, self.gamma)

    def k_critical(self, k: int) -> bool:
        return self.gamma == k and self.critical

    @cached_property
    def canonical(self) -> str:
        return canonical_form(self.g)

    @cached_property
    def deficiency(self) -> int:
        return deficiency(self.g)


# -- filters ------------------------------------------------------------------


def _int_arg(name: str, arg: str | None) -> int:
    if arg is None:
        raise HarnessError(f"predicate {name} needs a value")
    try:
        return int(arg)
    except ValueError:
        raise HarnessError(f"predicate {name} takes an integer, got {arg!r}") from None


def parse_predicate(text: str) -> Callable[[GraphFacts], bool]:
    """``gamma=K``, ``vertex-critical``, ``star-free=K``, ``parity=even|odd``,
    ``connected``, ``co=K``, ``min-degree=D`` (at least D), ``order=A`` or
    ``order=A..B``."""
    name, _, arg = text.partition("=")
    arg = arg or None
    if name == "gamma":
        k = _int_arg(name, arg)
        return lambda f: f.gamma == k
    if name == "vertex-critical":
        return lambda f: f.critical
    if name == "star-free":
        k = _int_arg(name, arg)
        if k < 2:
            raise HarnessError("star-free needs k >= 2")
        return lambda f: star_witness(f.g, k) is None
    if name == "parity":
        if arg not in ("even", "odd"):
            raise HarnessError("parity is even or odd")
        want = 0 if arg == "even" else 1
        return lambda f: f.g.n % 2 == want
    if name == "connected":
        return lambda f: is_connected(f.g)
    if name == "co":
        k = _int_arg(name, arg)
        return lambda f: odd_component_count(f.g) == k
    if name == "min-degree":
        k = _int_arg(name, arg)
        return lambda f: f.g.min_degree() >= k
    if name == "order":
        if arg is None:
            raise HarnessError("order needs a value")
        lo, _, hi = arg.partition("..")
        lo_n, hi_n = _int_arg(name, lo), _int_arg(name, hi or lo)
        return lambda f: lo_n <= f.g.n <= hi_n
    raise HarnessError(f"unknown predicate {text!r}")


def filter_corpus(graphs: Iterable[Graph], predicates: list[str]) -> Iterator[Graph]:
    tests = [parse_predicate(p) for p in predicates]
    for g in graphs:
        facts = GraphFacts(g)
        if all(t(facts) for t in tests):
            yield g


# -- reports ------------------------------------------------------------------


@dataclass
class OrderCounts:
    scanned: int = 0
    candidates: int = 0
    passed: int = 0
    violations: int = 0
    exceptions: int = 0


@dataclass
class CorpusReport:
    suite: str
    corpus: str
    filters: list[str]
    status: str = "exhaustive"
    counts: dict[int, OrderCounts] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    violation_details: list[dict] = field(default_factory=list)
    exceptions: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def order(self, n: int) -> OrderCounts:
        return self.counts.setdefault(n, OrderCounts())

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "corpus": self.corpus,
            "filters": self.filters,
            "status": self.status,
            "ok": self.ok,
            "counts": {str(n): vars(c) for n, c in sorted(self.counts.items())},
            "violations": self.violations,
            "violation_details": self.violation_details,
            "exceptions": self.exceptions,
        }

    def csv_rows(self) -> list[list]:
        return [[n, c.candidates, c.passed, c.violations, c.exceptions]
                for n, c in sorted(self.counts.items())]


CSV_HEADER = ["order", "candidates", "passed", "violations", "exceptions"]


# -- suites -------------------------------------------------------------------
#
# evaluate() returns None (not a candidate) or (kind, certificate) with kind in
# {"passed", "violation", "exception"}.


class Suite:
    name = ""
    filters: list[str] = []

    def evaluate(self, f: GraphFacts):
        raise NotImplementedError

    def finish(self, report: CorpusReport, corpus: Corpus, orders: set[int]) -> None:
        pass


class TwoCriticalSuite(Suite):
    name = "2critical"
    filters = ["gamma=2", "vertex-critical"]

    def evaluate(self, f):
        if not f.k_critical(2):
            return None
        g = f.g
        if g.n % 2 == 0 and f.canonical == canonical_form(cocktail_party(g.n // 2)):
            return "passed", {"graph6": f.canonical}
        return "violation", {"graph6": f.canonical, "reason": "2-critical graph is not a cocktail party graph"}

    def finish(self, report, corpus, orders):
        for n in sorted(orders):
            c = report.order(n)
            if c.passed > 1:
                report.violations.append(f"duplicate:{n}")
                report.violation_details.append({"order": n, "reason": "cocktail party graph listed twice"})
                c.violations += 1
            if n % 2 == 0 and c.passed == 0 and n in corpus.exhaustive_orders:
                missing = canonical_form(cocktail_party(n // 2))
                report.violations.append(missing)
                report.violation_details.append({"graph6": missing, "order": n,
                                                 "reason": "cocktail party graph missing"})
                c.violations += 1


_MATCHING_RULES = {
    (5, "even"): lambda n: True,
    (5, "odd"): lambda n: n >= 11,
    (6, "even"): lambda n: n != 12,
    (7, "odd"): lambda n: n != 13,
}


class MatchingSuite(Suite):
    def __init__(self, k: int, parity: str):
        if (k, parity) not in _MATCHING_RULES:
            raise HarnessError(f"no matching theorem for k={k}, parity={parity}")
        self.k, self.parity = k, parity
        self.order_ok = _MATCHING_RULES[(k, parity)]
        self.name = f"matching:{k}:{parity}"
        self.filters = ["gamma=3", "vertex-critical", f"star-free={k}", f"parity={parity}"]
        if (k, parity) == (7, "odd"):
            self.filters.append("co=1")

    def evaluate(self, f):
        g = f.g
        if g.n % 2 != (1 if self.parity == "odd" else 0) or not self.order_ok(g.n):
            return None
        if (self.k, self.parity) == (7, "odd") and odd_component_count(g) != 1:
            return None
        if not f.k_critical(3) or star_witness(g, self.k) is not None:
            return None
        target = 0 if self.parity == "even" else 1
        if f.deficiency == target:
            return "passed", None
        cert = {"graph6": f.canonical, "order": g.n, "gamma": 3, "vertex_critical": True,
                "star_free": self.k, "deficiency": f.deficiency}
        if g.n % 2:
            cert["witness"] = near_pm_witness(g).to_json()
        else:
            cert["witness"] = tutte_witness(g).to_json()
        if self.parity == "odd" and self.k == 7 and f.canonical in known_odd_exceptions():
            return "exception", cert
        return "violation", cert


class CutLemmaSuite(Suite):
    name = "cut-lemma"
    filters = ["gamma=3", "vertex-critical"]

    def evaluate(self, f):
        if not f.k_critical(3):
            return None
        verdict = cut_lemma_check(f.g)
        if verdict.ok:
            return "passed", None
        return "violation", {"graph6": f.canonical, "verdict": verdict.to_json()}


class FactsSuite(Suite):
    name = "facts"
    filters = ["gamma=3", "vertex-critical"]

    def evaluate(self, f):
        if not f.k_critical(3):
            return None
        cert = is_gamma_vertex_critical(f.g)
        if cert.facts is not None and cert.facts.ok:
            return "passed", None
        return "violation", {"graph6": f.canonical, "certificate": cert.to_json()}


class Degree1Suite(Suite):
    name = "degree1"
    filters = ["gamma=3", "vertex-critical"]

    def evaluate(self, f):
        if not f.k_critical(3):
            return None
        verdict = degree1_lemma_check(f.g, f.g.full)
        if verdict.status == "pass":
            return "passed", None
        return "violation", {"graph6": f.canonical, "verdict": verdict.to_json()}


class ConnectivitySuite(Suite):
    name = "3conn"
    filters = ["gamma=3", "vertex-critical", "parity=even", "min-degree=3"]

    def evaluate(self, f):
        g = f.g
        if g.n % 2 or g.min_degree() < 3 or not f.k_critical(3):
            return None
        kappa = vertex_connectivity(g)
        if kappa >= 3:
            return "passed", None
        return "violation", {"graph6": f.canonical, "connectivity": kappa}


def make_suite(name: str) -> Suite:
    if name.startswith("matching:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise HarnessError("matching suite is matching:K:PARITY")
        try:
            k = int(parts[1])
        except ValueError:
            raise HarnessError(f"bad star bound in {name!r}") from None
        return MatchingSuite(k, parts[2])
    simple = {"2critical": TwoCriticalSuite, "cut-lemma": CutLemmaSuite, "3conn": ConnectivitySuite,
              "facts": FactsSuite, "degree1": Degree1Suite}
    if name not in simple:
        raise HarnessError(f"unknown suite {name!r}")
    return simple[name]()


SUITE_NAMES = ["2critical", "matching:K:PARITY", "cut-lemma", "3conn", "facts", "degree1"]


# -- runner -------------------------------------------------------------------


def _evaluate_batch(args) -> list[tuple[int, list]]:
    names, lines = args
    suites = [make_suite(n) for n in names]
    out = []
    for line in lines:
        facts = GraphFacts(parse_graph6(line))
        out.append((facts.g.n, [s.evaluate(facts) for s in suites]))
    return out


def _outcomes(corpus: Corpus, suites: list[Suite], workers: int, chunk: int = 2000):
    """Yield (order, outcome per suite) for every graph, in corpus order."""
    if workers <= 1:
        for g in corpus:
            facts = GraphFacts(g)
            yield g.n, [s.evaluate(facts) for s in suites]
        return
    names = [s.name for s in suites]
    stream = iter(corpus)

    def batches():
        while True:
            block = [to_graph6(g) for g in islice(stream, chunk)]
            if not block:
                return
            yield names, block

    with ProcessPoolExecutor(max_workers=workers) as pool:
        for block in pool.map(_evaluate_batch, batches()):
            yield from block


def run_suites(corpus: Corpus, suite_names: list[str], workers: int = 1) -> dict[str, CorpusReport]:
    """Run several suites over one pass of the corpus."""
    suites = [make_suite(n) for n in suite_names]
    reports = {s.name: CorpusReport(s.name, corpus.id, list(s.filters)) for s in suites}
    orders: set[int] = set()
    for n, results in _outcomes(corpus, suites, workers):
        orders.add(n)
        for s, res in zip(suites, results):
            rep = reports[s.name]
            c = rep.order(n)
            c.scanned += 1
            if res is None:
                continue
            kind, cert = res
            c.candidates += 1
            if kind == "passed":
                c.passed += 1
            elif kind == "exception":
                c.exceptions += 1
                rep.exceptions.append(cert)
            else:
                c.violations += 1
                rep.violations.append(cert["graph6"])
                rep.violation_details.append(cert)
    for s in suites:
        rep = reports[s.name]
        if not orders or not orders <= corpus.exhaustive_orders:
            rep.status = "sampled"
        s.finish(rep, corpus, orders)
    return reports


def verify_2critical(corpus: Corpus, workers: int = 1) -> CorpusReport:
    return run_suites(corpus, ["2critical"], workers)["2critical"]


def verify_theorem_matching(corpus: Corpus, k: int, parity: str, workers: int = 1) -> CorpusReport:
    name = MatchingSuite(k, parity).name
    return run_suites(corpus, [name], workers)[name]


def verify_cut_lemma(corpus: Corpus, workers: int = 1) -> CorpusReport:
    return run_suites(corpus, ["cut-lemma"], workers)["cut-lemma"]


def verify_3connectivity(corpus: Corpus, workers: int = 1) -> CorpusReport:
    return run_suites(corpus, ["3conn"], workers)["3conn"]


def verify_facts(corpus: Corpus, workers: int = 1) -> CorpusReport:
    return run_suites(corpus, ["facts"], workers)["facts"]
