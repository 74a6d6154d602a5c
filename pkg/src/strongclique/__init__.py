"""Strong cliques, CIS and localizable graphs, with vertex-transitive graph tooling."""

from __future__ import annotations

from .cliques import (
    chromatic_number,
    clique_cover_number,
    clique_graph,
    clique_number,
    independence_number,
    maximal_cliques,
    maximal_independent_sets,
)
from .corpus import CorpusSpec, build_corpus
from .generators import GroupSpec, ConnectionSet, cayley, circulant, gen_johnson, h_graph, named
from .graph import Graph, GraphError, complement, induced_subgraph, local_graph
from .io import from_dimacs, from_graph6, read_graph, to_dimacs, to_graph6
from .perm import Permutation, are_isomorphic, automorphisms, is_vertex_transitive
from .report import PropertyReport, analyze, emit
from .strong import (
    has_strong_clique,
    is_cis,
    is_co_well_covered,
    is_localizable,
    is_strong_clique,
    is_strong_independent_set,
    is_well_covered,
    vt_strong_criterion,
)
from .suites import SUITES, SuiteResult, verify_theorem

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
