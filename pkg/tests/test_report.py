from __future__ import annotations

import json

import pytest

from strongclique import generators as gen
from strongclique.graph import complement, empty_graph, line_graph
from strongclique.report import REPORT_FIELDS, PropertyReport, analyze, analyze_many, emit

K, C = gen.complete, gen.cycle


def test_k4_report_line(tmp_path):
    text = emit([analyze("K4", K(4))], tmp_path / "k4.jsonl")
    assert text.count("\n") == 1
    assert '"valency":3,"omega":4' in text and '"localizable":true' in text
    assert (tmp_path / "k4.jsonl").read_text() == text


def test_key_order_is_fixed():
    d = json.loads(analyze("C5", C(5)).to_json())
    assert tuple(d) == REPORT_FIELDS


def test_empty_emit(tmp_path):
    assert emit([], tmp_path / "none.jsonl") == ""
    assert (tmp_path / "none.jsonl").read_text() == ""


def test_emit_surfaces_io_errors(tmp_path):
    with pytest.raises(OSError):
        emit([analyze("K2", K(2))], tmp_path / "missing" / "x.jsonl")


@pytest.mark.parametrize(
    "gid,g,expect",
    [
        ("C5", C(5), dict(omega=2, alpha=2, chi=3, theta=3, cis=False, has_strong_clique=False, localizable=False)),
        ("co-C6", complement(C(6)), dict(omega=3, alpha=2, chi=3, theta=2, cis=False, has_strong_clique=True, localizable=True)),
        ("L(K6)", line_graph(K(6)), dict(omega=5, alpha=3, has_strong_clique=True, localizable=False)),
        ("E0", empty_graph(0), dict(n=0, omega=0, n_max_cliques=0, has_strong_clique=False, localizable=False)),
    ],
)
def test_report_values(gid, g, expect):
    r = analyze(gid, g)
    for k, v in expect.items():
        assert getattr(r, k) == v, k
    if g.n:
        assert r.consistency_errors() == []


def test_witnesses():
    r = analyze("H2", gen.h_graph(2))
    assert r.witnesses == {"strong_clique": [0, 1, 2, 3], "partition": [[0, 1, 2, 3], [4, 5, 6, 7]]}
    assert analyze("C5", C(5)).witnesses == {}


def test_consistency_errors_flag_bad_reports():
    r = analyze("K3", K(3))
    bad = PropertyReport(**{**r.__dict__, "has_strong_clique": False, "omega": 9})
    errs = bad.consistency_errors()
    assert "localizable without a strong clique" in errs
    assert "clique number exceeds chromatic number" in errs


def test_parallel_analysis_matches_serial():
    items = [(f"C{n}", C(n)) for n in range(3, 12)] + [("Petersen", gen.petersen())]
    serial = analyze_many(items)
    assert [r.graph_id for r in serial] == sorted(gid for gid, _ in items)
    assert [r.to_json() for r in analyze_many(items, jobs=2)] == [r.to_json() for r in serial]


def test_colorings_optional():
    r = analyze("C7", C(7), colorings=False)
    assert r.chi is None and r.theta is None
