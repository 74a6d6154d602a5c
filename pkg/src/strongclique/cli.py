"""Command line: ``gen``, ``analyze``, ``verify`` and ``corpus``.

Exit status is 0 on success, 1 when a suite fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .cliques import maximal_cliques, maximal_independent_sets
from .corpus import DESK_CAP, CorpusSpec, build_corpus
from .generators import GroupError, named
from .graph import GraphError, valency
from .io import read_graph, to_dimacs, to_graph6
from .perm import CapExceeded
from .report import analyze, emit
from .strong import PreconditionError, dominating_independent_set, strong_by_enumeration
from .suites import SUITES, UnknownSuite, merge_reports, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongclique", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print a named graph")
    g.add_argument("family", help="K C P Kmm Kmn E L petersen H J L1A..L1D circulant line-K line-Kmm coC")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--format", choices=("graph6", "dimacs"), default="graph6")

    a = sub.add_parser("analyze", help="property report of a graph6 or DIMACS file ('-' for stdin)")
    a.add_argument("graphfile")
    a.add_argument("--strong", action="store_true", help="one verdict line per maximal clique")
    a.add_argument("--id", dest="graph_id", help="graph id in the report (default: graph6)")

    v = sub.add_parser("verify", help="run a replay suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"], metavar="suite", help="one of: " + ", ".join(sorted(SUITES)) + ", all")
    v.add_argument("--corpus-max", type=int, help=f"corpus order bound (<= {DESK_CAP})")
    v.add_argument("--out", help="write JSON-lines reports here")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for corpus analysis")
    v.add_argument("-q", "--quiet", action="store_true", help="only print failures and the verdict")

    c = sub.add_parser("corpus", help="list corpus graphs as 'id<TAB>graph6'")
    c.add_argument("--valency", type=int, nargs="+", required=True)
    c.add_argument("--max-order", type=int)
    return p


def _read(path: str):
    try:
        if path == "-":
            return read_graph(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return read_graph(fh)
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def cmd_gen(args) -> int:
    try:
        g = named(args.family, args.params)
    except (TypeError, IndexError) as exc:
        raise UsageError(f"bad parameters for {args.family}: {args.params}") from exc
    sys.stdout.write(to_dimacs(g) if args.format == "dimacs" else to_graph6(g) + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _read(args.graphfile)
    if not args.strong:
        print(analyze(args.graph_id or to_graph6(g), g).to_json())
        return EXIT_OK
    mis = maximal_independent_sets(g)
    for c in maximal_cliques(g):
        verdict = strong_by_enumeration(g, c, mis)
        dom = dominating_independent_set(g, c)
        if verdict.is_strong != (dom is None):
            raise AssertionError(f"strong test disagrees on {c}")
        line = {
            "clique": list(c),
            "is_strong": verdict.is_strong,
            "missed_by": list(verdict.witness) if verdict.witness else None,
            "dominated_by": list(dom) if dom else None,
        }
        print(json.dumps(line, separators=(",", ":")))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus_max is not None and not 1 <= args.corpus_max <= DESK_CAP:
        raise UsageError(f"--corpus-max must lie in [1, {DESK_CAP}]")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed, reports = [], []
    for name in names:
        res = verify_theorem(name, corpus_max=args.corpus_max, jobs=args.jobs)
        reports += res.reports
        for c in res.checks:
            if not (args.quiet and c.ok):
                print(f"[{name}] {c.line()}")
        print(f"[{name}] {'PASS' if res.passed else 'FAIL'}")
        if not res.passed:
            failed.append(name)
    if args.out:
        emit(merge_reports(reports), Path(args.out))
    if failed:
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        spec = CorpusSpec(valencies=tuple(args.valency), max_order=args.max_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for e in build_corpus(spec):
        print(f"{e.graph_id}\t{to_graph6(e.graph)}\t{e.graph.n}\t{valency(e.graph)}")
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "verify": cmd_verify, "corpus": cmd_corpus}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, UnknownSuite, GraphError, GroupError, PreconditionError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
