from __future__ import annotations

import io

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from strongclique import generators as gen
from strongclique.graph import Graph, GraphError, empty_graph
from strongclique.io import from_dimacs, from_graph6, read_graph, to_dimacs, to_graph6


@pytest.mark.parametrize(
    "g,text",
    [
        (empty_graph(0), "?"),
        (empty_graph(1), "@"),
        (gen.complete(4), "C~"),
        (gen.path(2), "A_"),
        (gen.complete_bipartite(3), "EFz_"),
    ],
)
def test_graph6_known_strings(g, text):
    assert to_graph6(g) == text
    assert from_graph6(text) == g


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("n", [62, 63, 100])
def test_graph6_large_orders(n):
    g = gen.cycle(n)
    s = to_graph6(g)
    assert from_graph6(s) == g
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_header_and_errors():
    assert from_graph6(">>graph6<<C~\n") == gen.complete(4)
    for bad in (":Fa@x^", "&C~", "C", "C~~"):
        with pytest.raises(GraphError):
            from_graph6(bad)


def test_dimacs_round_trip():
    g = gen.petersen()
    text = to_dimacs(g, comment="petersen")
    assert text.startswith("c petersen\np edge 10 15\n")
    assert from_dimacs(text) == g


@pytest.mark.parametrize("text", ["e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\nx\n"])
def test_dimacs_errors(text):
    with pytest.raises(GraphError):
        from_dimacs(text)


def test_read_graph_sniffs_format():
    g = gen.cycle(5)
    assert read_graph(io.StringIO(to_graph6(g) + "\n")) == g
    assert read_graph(io.StringIO(to_dimacs(g))) == g
    with pytest.raises(GraphError):
        read_graph(io.StringIO("\n\n"))
