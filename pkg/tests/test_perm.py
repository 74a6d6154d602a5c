from __future__ import annotations

import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph, to_nx
from strongclique import generators as gen
from strongclique.graph import cartesian_product, complement, empty_graph, relabel
from strongclique.perm import (
    CapExceeded,
    GeneratorSet,
    Permutation,
    are_isomorphic,
    automorphisms,
    find_isomorphism,
    is_automorphism,
    is_vertex_transitive,
    orbit,
    refined_partition,
    set_orbit,
)

K, C = gen.complete, gen.cycle


def brute_force_aut_count(g) -> int:
    return sum(1 for p in permutations(range(g.n)) if is_automorphism(g, p))


def backtrack_aut_count(g) -> int:
    """Count adjacency-preserving bijections by extending partial maps."""
    image = [-1] * g.n
    used = [False] * g.n

    def extend(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for w in range(g.n):
            if used[w] or g.degree(w) != g.degree(v):
                continue
            if all(g.has_edge(v, u) == g.has_edge(w, image[u]) for u in range(v)):
                image[v], used[w] = w, True
                total += extend(v + 1)
                used[w] = False
        return total

    return extend(0)


@pytest.mark.parametrize("g", [gen.petersen(), gen.h_graph(3), gen.circulant(12, [1, 4, 6]), C(9)])
def test_order_matches_backtracking_oracle(g):
    assert automorphisms(g).order() == backtrack_aut_count(g)


def test_permutation_algebra():
    p = Permutation((1, 2, 0))
    q = Permutation((1, 0, 2))
    assert (p * q)(0) == p(q(0)) == 2
    assert (p * p.inverse()).is_identity()
    assert p.image_set([0, 1]) == (1, 2)
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@pytest.mark.parametrize(
    "g,order",
    [(K(4), 24), (C(4), 8), (gen.petersen(), 120), (K(1), 1), (empty_graph(0), 1), (gen.path(3), 2),
     (complement(C(6)), 12), (gen.complete_bipartite(3), 72), (gen.h_graph(4), None)],
)
def test_automorphism_group_orders(g, order):
    a = automorphisms(g)
    assert all(is_automorphism(g, p) for p in a.gens)
    if order is not None:
        assert a.order() == order



@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_order_matches_brute_force(g):
    assert automorphisms(g).order() == brute_force_aut_count(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_stabilizer_chain_matches_closure(g):
    a = automorphisms(g)
    closure = GeneratorSet(a.degree, a.gens)
    assert a.order() == closure.order() == len(closure.elements())


def test_closure_cap():
    a = automorphisms(K(12))
    with pytest.raises(CapExceeded):
        a.elements(limit=1000)
    assert a.order() == 479001600


@pytest.mark.parametrize("n", range(3, 10))
def test_cycles_vertex_transitive(n):
    assert is_vertex_transitive(C(n))


def test_vertex_transitivity_examples():
    assert not is_vertex_transitive(gen.path(3))
    for n in range(2, 7):
        assert is_vertex_transitive(gen.h_graph(n))
    assert is_vertex_transitive(gen.petersen())
    # regular but not vertex-transitive: the Frucht graph has trivial group
    frucht = gen.Graph.from_edges(12, list(nx.frucht_graph().edges()))
    assert not is_vertex_transitive(frucht)
    assert automorphisms(frucht).order() == 1


def test_vertex_transitive_order_divisible():
    for g in (gen.petersen(), gen.h_graph(3), gen.circulant(12, [1, 4, 6]), gen.gen_johnson(7, 3, 1)):
        assert is_vertex_transitive(g)
        assert automorphisms(g).order() % g.n == 0


def test_johnson_group_contains_s7(j731):
    assert automorphisms(j731).order() % 5040 == 0


def test_orbits():
    a = automorphisms(gen.path(3))
    assert orbit(a, 0) == (0, 2)
    assert orbit(a, 1) == (1,)
    assert orbit(automorphisms(gen.complete_bipartite(3)), 0) == tuple(range(6))
    assert a.orbits() == [(0, 2), (1,)]


def test_clique_orbit_under_seven_cycle(j731):
    subs = gen.johnson_subsets(7, 3)
    idx = {s: i for i, s in enumerate(subs)}
    shift = Permutation(tuple(idx[tuple(sorted(x % 7 + 1 for x in s))] for s in subs))
    assert is_automorphism(j731, shift)
    c1 = tuple(sorted(idx[s] for s in [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]))
    assert len(set_orbit([shift], c1)) == 7


def test_isomorphism_examples():
    assert are_isomorphic(C(5), complement(C(5)))
    assert not are_isomorphic(gen.complete_bipartite(3), C(6))
    for n in range(3, 8):
        assert are_isomorphic(gen.c3_cn(n), cartesian_product(C(3), C(n)))
    # same degree sequence, different graphs
    assert not are_isomorphic(C(6), gen.Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_find_isomorphism_returns_mapping():
    rng = random.Random(7)
    g = gen.petersen()
    images = list(range(10))
    rng.shuffle(images)
    h = relabel(g, images)
    p = find_isomorphism(g, h)
    assert p is not None
    assert all(h.has_edge(p(u), p(v)) for u, v in g.edges())


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_matches_networkx(g, h):
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_isomorphism_random_relabel_and_perturb():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(4, 14)
        g = random_graph(rng, n, rng.choice((0.3, 0.5)))
        images = list(range(n))
        rng.shuffle(images)
        h = relabel(g, images)
        assert are_isomorphic(g, h) and are_isomorphic(h, g)
        edges = h.edges()
        if edges:
            cut = gen.Graph.from_edges(n, edges[1:])
            assert are_isomorphic(g, cut) == nx.is_isomorphic(to_nx(g), to_nx(cut))


def test_refined_partition_is_equitable():
    cells = refined_partition(gen.path(4))
    assert sorted(cells) == [(0, 3), (1, 2)]
    cells = refined_partition(C(6), individualized=[0])
    assert (0,) in cells and (3,) in cells
