from __future__ import annotations

import pytest

from strongclique import generators as gen
from strongclique.corpus import CorpusSpec, Entry, build_corpus
from strongclique.graph import complement
from strongclique.io import to_graph6
from strongclique.report import analyze
from strongclique.suites import (
    SUITES,
    SuiteResult,
    UnknownSuite,
    _classify,
    all_graphs,
    merge_reports,
    one_triangle_no_universal,
    unique_max_clique_star,
    verify_theorem,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_on_small_corpus(name):
    res = verify_theorem(name, corpus_max=14)
    assert res.passed, [c.line() for c in res.checks if not c.ok]
    assert res.checks


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify_theorem("no-such-suite")


def test_johnson_suite_emits_one_report():
    res = verify_theorem("johnson-cis")
    assert res.passed and len(res.reports) == 1 and res.reports[0].n == 35


def test_counterexample_names_graph6():
    corpus = build_corpus(CorpusSpec(valencies=(3,), max_order=8))
    res = SuiteResult("probe")
    _classify(res, corpus, listed=[Entry("K3,3", gen.complete_bipartite(3))])
    assert not res.passed
    failing = [c for c in res.checks if not c.ok]
    assert any(to_graph6(gen.complete(4)) in c.detail for c in failing)
    assert any("FAIL" in c.line() for c in failing)


def test_suite_result_bookkeeping():
    res = SuiteResult("x")
    assert res.passed
    assert res.expect_none("nothing bad", [], 3)
    assert res.checks[-1].line() == "PASS nothing bad (3 checked)"
    assert not res.check("broken", False, "why")
    assert not res.passed


def test_merge_reports_dedupes_and_sorts():
    a, b = analyze("b", gen.cycle(5)), analyze("a", gen.complete(3))
    assert [r.graph_id for r in merge_reports([a, b, a])] == ["a", "b"]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_all_graphs_counts(n, count):
    assert len(all_graphs(n)) == count


def test_local_graph_predicates():
    L = [gen.local_graph_L(i) for i in range(1, 7)]
    assert all(one_triangle_no_universal(x) for x in L)
    assert [unique_max_clique_star(x) for x in L] == [False, True, True, False, False, False]
    assert not unique_max_clique_star(gen.complete(4))
    assert not unique_max_clique_star(complement(gen.cycle(4)))


@pytest.mark.parametrize("name", ["cubic", "quartic"])
def test_classification_at_order_32(name):
    res = verify_theorem(name, corpus_max=32)
    assert res.passed, [c.line() for c in res.checks if not c.ok]
