"""Command-line front end: analyze, filter, verify, search, gen.

Exit status: 0 on success, 1 when a verification suite reports violations,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .canon import canonical_form
from .domination import domination_number, is_gamma_edge_critical, is_gamma_vertex_critical
from .enumeration import MAX_ENUMERATION_ORDER, enumerate_graphs
from .graph import Graph, GraphError, construct_named, named_constructions
from .graph6 import Graph6Error, parse_graph6, read_corpus, to_graph6
from .harness import (CSV_HEADER, HarnessError, exhaustive_corpus, file_corpus, filter_corpus,
                      random_corpus, run_suites, SUITE_NAMES)
from .matching import (is_bicritical, is_factor_critical, maximum_matching, near_pm_witness,
                       tutte_witness)
from .search import SEARCHES
from .structure import star_witness, vertex_connectivity

USAGE_ERRORS = (Graph6Error, GraphError, HarnessError, ValueError, OSError)


class UsageError(Exception):
    pass


def _envelope(config: dict, seed: int, body: dict) -> str:
    doc = {"tool": {"name": "domcrit", "version": __version__}, "config": config, "seed": seed}
    doc.update(body)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _inputs(args) -> list[Graph]:
    graphs = [parse_graph6(text) for text in args.g6 or []]
    for path in args.inputs or []:
        graphs.extend(read_corpus(path))
    if not graphs and not args.g6 and not args.inputs:
        graphs.extend(read_corpus("-"))
    return graphs


def analyze_graph(g: Graph, ks: Sequence[int] = (5, 6, 7)) -> dict:
    """Full certificate bundle for one graph."""
    dom = domination_number(g)
    crit = is_gamma_vertex_critical(g)
    mat = maximum_matching(g)
    out = {
        "graph6": to_graph6(g),
        "canonical": canonical_form(g),
        "n": g.n,
        "edges": g.edge_count(),
        "gamma": dom.gamma,
        "gamma_witness": dom.to_json()["witness"],
        "vertex_critical": crit.is_vertex_critical,
        "edge_critical": is_gamma_edge_critical(g),
        "criticality": crit.to_json(),
        "matching": mat.to_json(),
        "deficiency": mat.deficiency,
        "perfect_matching": g.n % 2 == 0 and mat.deficiency == 0,
        "near_pm": g.n % 2 == 1 and mat.deficiency == 1,
        "factor_critical": is_factor_critical(g),
        "bicritical": is_bicritical(g),
        "tutte_witness": tutte_witness(g).to_json(),
        "connectivity": vertex_connectivity(g),
        "star_free": {},
    }
    if g.n % 2:
        w = near_pm_witness(g)
        out["near_pm_witness"] = w.to_json() if w else None
    for k in ks:
        sw = star_witness(g, k)
        out["star_free"][str(k)] = {"free": sw is None, "witness": sw.to_json() if sw else None}
    return out


def _corpus_from_args(args):
    chosen = sum(x is not None and x != [] for x in (args.inputs, args.exhaustive, args.random))
    if chosen != 1:
        raise UsageError("choose exactly one of --input, --exhaustive, --random")
    if args.inputs:
        return file_corpus(args.inputs)
    if args.exhaustive is not None:
        if not 1 <= args.exhaustive <= MAX_ENUMERATION_ORDER:
            raise UsageError(f"--exhaustive takes 1..{MAX_ENUMERATION_ORDER}")
        return exhaustive_corpus(args.exhaustive, args.min_order, args.connected)
    lo, _, hi = args.orders.partition("..")
    return random_corpus(args.random, int(lo), int(hi or lo), args.seed, odd_only=args.odd_only)


def cmd_analyze(args, out) -> int:
    ks = [int(k) for k in args.k.split(",")]
    graphs = [analyze_graph(g, ks) for g in _inputs(args)]
    config = {"subcommand": "analyze", "k": ks, "inputs": args.inputs or [], "g6": args.g6 or []}
    out.write(_envelope(config, args.seed, {"graphs": graphs}))
    return 0


def cmd_filter(args, out) -> int:
    for g in filter_corpus(_inputs(args), args.pred or []):
        out.write(to_graph6(g) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    suites = [s for part in args.suites for s in part.split(",") if s]
    corpus = _corpus_from_args(args)
    reports = run_suites(corpus, suites, workers=args.workers)
    failed = any(not r.ok for r in reports.values())
    if args.format == "csv":
        if len(reports) != 1:
            raise UsageError("csv output takes exactly one suite")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(next(iter(reports.values())).csv_rows())
        out.write(buf.getvalue())
    elif args.format == "graph6":
        for r in reports.values():
            for exc in r.exceptions:
                out.write(exc["graph6"] + "\n")
    else:
        config = {"subcommand": "verify", "suites": suites, "corpus": corpus.id,
                  "inputs": args.inputs or [], "exhaustive": args.exhaustive,
                  "connected": args.connected, "min_order": args.min_order,
                  "random": args.random, "orders": args.orders, "odd_only": args.odd_only}
        body = {"reports": [r.to_json() for r in reports.values()]}
        out.write(_envelope(config, args.seed, body))
    return 1 if failed else 0


def cmd_search(args, out) -> int:
    if args.name not in SEARCHES:
        raise UsageError(f"unknown search {args.name!r}; choose from {sorted(SEARCHES)}")
    result = SEARCHES[args.name]()
    if args.format == "graph6":
        for g in result.graphs:
            out.write(to_graph6(g) + "\n")
    else:
        config = {"subcommand": "search", "name": args.name}
        out.write(_envelope(config, args.seed, {"result": result.to_json()}))
    return 0


def cmd_gen(args, out) -> int:
    if args.name == "enumerate":
        if len(args.params) != 1:
            raise UsageError("gen enumerate N")
        for g in enumerate_graphs(int(args.params[0]), args.connected):
            out.write(to_graph6(g) + "\n")
        return 0
    if args.name in ("disjoint_union", "add_universal_vertex"):
        params = [parse_graph6(p) for p in args.params]
    else:
        params = args.params
    out.write(to_graph6(construct_named(args.name, *params)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domcrit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"domcrit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_inputs(p):
        p.add_argument("inputs", nargs="*", help="graph6 files ('-' for stdin, the default)")
        p.add_argument("--g6", action="append", help="inline graph6 string (repeatable)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("analyze", help="certificate bundle for each input graph")
    graph_inputs(p)
    p.add_argument("-k", default="5,6,7", help="star bounds to test, comma separated")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("filter", help="stream the input graphs satisfying all predicates")
    graph_inputs(p)
    p.add_argument("--pred", action="append",
                   help="gamma=K, vertex-critical, star-free=K, parity=even|odd, connected, "
                        "co=K, min-degree=D, order=A..B")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("verify", help="run verification suites over a corpus")
    p.add_argument("suites", nargs="+", help=" | ".join(SUITE_NAMES))
    p.add_argument("--input", dest="inputs", action="append", help="graph6 corpus file ('-' for stdin)")
    p.add_argument("--exhaustive", type=int, help="enumerate every graph up to this order")
    p.add_argument("--min-order", type=int, default=1)
    p.add_argument("--connected", action="store_true", help="connected graphs only (enumeration)")
    p.add_argument("--random", type=int, help="number of seeded random graphs")
    p.add_argument("--orders", default="1..12", help="order range for --random")
    p.add_argument("--odd-only", action="store_true", help="random graphs of odd order only")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv", "graph6"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="reconstruct exceptional graphs: " + " | ".join(sorted(SEARCHES)))
    p.add_argument("name")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "graph6"], default="json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="named constructions or 'enumerate N': "
                                   + ", ".join(named_constructions()))
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args, out)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"domcrit: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
