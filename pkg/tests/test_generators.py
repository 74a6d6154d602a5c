from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from conftest import from_nx, to_nx
from strongclique import generators as gen
from strongclique.cliques import maximal_cliques
from strongclique.generators import ConnectionSet, GroupError, GroupSpec, cayley
from strongclique.graph import GraphError, cartesian_product, complement, is_connected, line_graph, local_graph, valency
from strongclique.perm import Permutation, are_isomorphic, is_automorphism, is_vertex_transitive

K, C = gen.complete, gen.cycle


def generating_set(grp: GroupSpec) -> list[int]:
    if grp.kind == "cyclic":
        return [grp.encode(1)]
    if grp.kind == "product":
        return [grp.encode(tuple(int(i == j) for j in range(len(grp.params)))) for i in range(len(grp.params))]
    n = grp.params[0]
    if grp.kind == "dihedral":
        return [grp.encode(tuple((i + 1) % n for i in range(n))), grp.encode(tuple((-i) % n for i in range(n)))]
    cyc = tuple((i + 1) % n for i in range(n))
    swap = tuple([1, 0] + list(range(2, n))) if n > 1 else (0,)
    return [grp.encode(cyc), grp.encode(swap)]


def sample_groups() -> list[GroupSpec]:
    """Every kind at small orders, plus a spread of orders up to 200."""
    out = [GroupSpec.cyclic(n) for n in list(range(1, 25)) + [31, 64, 97, 128, 200]]
    out += [GroupSpec.product(a, b) for a in range(2, 13) for b in range(2, a + 1) if a * b <= 24]
    out += [GroupSpec.product(*p) for p in ((8, 8), (10, 10), (20, 10), (25, 8), (2, 3, 4), (5, 5, 2), (2, 2, 2, 2))]
    out += [GroupSpec.dihedral(n) for n in list(range(3, 13)) + [50, 100]]
    out += [GroupSpec.symmetric(n) for n in range(1, 6)]
    return out


@pytest.mark.parametrize("grp", sample_groups(), ids=str)
def test_group_axioms(grp):
    e = grp.identity
    elems = list(grp.elements())
    assert len(elems) == grp.order
    for a in elems:
        assert grp.mul(a, e) == grp.mul(e, a) == a
        b = grp.inv(a)
        assert grp.mul(a, b) == grp.mul(b, a) == e
    # Latin square
    for a in elems:
        assert len({grp.mul(a, b) for b in elems}) == grp.order
    # generating set reaches every element
    gens = generating_set(grp)
    reached, frontier = {e}, [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = grp.mul(x, g)
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    assert len(reached) == grp.order
    # Light's test: associativity on a generating set implies it everywhere
    for g in gens:
        for a in elems:
            ag = grp.mul(a, g)
            for b in elems:
                assert grp.mul(ag, b) == grp.mul(a, grp.mul(g, b))


def test_group_encodings():
    z = GroupSpec.product(4, 2)
    assert str(z) == "Z4xZ2" and z.encode((1, 1)) == 3 and z.digits(3) == (1, 1)
    assert GroupSpec.cyclic(12).encode(-1) == 11
    d = GroupSpec.dihedral(4)
    assert d.order == 8 and str(d) == "D4"
    assert d.element_order(d.encode((1, 2, 3, 0))) == 4
    assert GroupSpec.symmetric(4).order == 24
    with pytest.raises(GroupError):
        GroupSpec("free", (2,))
    with pytest.raises(GroupError):
        GroupSpec.cyclic(10**5)
    with pytest.raises(GroupError):
        d.encode((0, 0, 1, 2))


def test_connection_set_validation():
    z = GroupSpec.cyclic(6)
    with pytest.raises(GroupError):
        ConnectionSet(z, frozenset({0, 1, 5}))
    with pytest.raises(GroupError):
        ConnectionSet(z, frozenset({1}))
    assert ConnectionSet.closure(z, [1, 3]).sorted() == [1, 3, 5]
    with pytest.raises(GroupError):
        cayley(GroupSpec.cyclic(5), ConnectionSet.closure(z, [1]))


def test_cayley_examples():
    g = gen.circulant(12, [1, 4, 6])
    assert valency(g) == 5
    g = gen.circulant(9, [1, 3])
    assert valency(g) == 4 and g.n == 9
    assert gen.circulant(5, [1, 2]) == K(5)


@pytest.mark.parametrize(
    "grp,gens",
    [
        (GroupSpec.cyclic(12), [1, 4, 6]),
        (GroupSpec.product(4, 2), [(1, 0), (0, 1)]),
        (GroupSpec.dihedral(5), [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)]),
        (GroupSpec.symmetric(4), [(1, 0, 2, 3), (1, 2, 3, 0)]),
    ],
    ids=str,
)
def test_left_translations_are_automorphisms(grp, gens):
    g = cayley(grp, ConnectionSet.closure(grp, gens))
    for a in grp.elements():
        assert is_automorphism(g, Permutation(tuple(grp.mul(a, x) for x in grp.elements())))
    assert is_vertex_transitive(g)


@pytest.mark.parametrize("n", range(2, 9))
def test_h_graph_structure(n):
    g = gen.h_graph(n)
    assert g.n == 4 * n and valency(g) == 4 and is_connected(g)
    assert is_vertex_transitive(g)
    fours = [c for c in maximal_cliques(g) if len(c) == 4]
    assert fours == [tuple(range(4 * i, 4 * i + 4)) for i in range(n)]


def test_h_graph_links():
    g = gen.h_graph(4)
    # z_i ~ x_{i+1}, w_i ~ y_{i+1}, and the wrap x_1 ~ z_4, y_1 ~ w_4
    assert g.has_edge(2, 4) and g.has_edge(3, 5) and g.has_edge(0, 14) and g.has_edge(1, 15)
    with pytest.raises(GraphError):
        gen.h_graph(1)


def test_johnson_examples():
    j = gen.gen_johnson(7, 3, 1)
    assert j.n == 35 and valency(j) == 18
    assert gen.johnson_subsets(7, 3)[:2] == [(1, 2, 3), (1, 2, 4)]
    assert are_isomorphic(gen.gen_johnson(5, 2, 0), gen.petersen())
    assert are_isomorphic(gen.gen_johnson(4, 2, 1), line_graph(K(4)))
    for bad in ((3, 3, 1), (5, 2, 2), (5, 2, -1)):
        with pytest.raises(GraphError):
            gen.gen_johnson(*bad)


@pytest.mark.parametrize("n,k,i", [(5, 2, 1), (6, 3, 1), (6, 2, 0), (7, 3, 0)])
def test_johnson_matches_definition(n, k, i):
    g = gen.gen_johnson(n, k, i)
    subs = list(combinations(range(1, n + 1), k))
    want = [(a, b) for a, b in combinations(range(len(subs)), 2) if len(set(subs[a]) & set(subs[b])) == i]
    assert g.edges() == want


def test_petersen_matches_networkx():
    assert are_isomorphic(gen.petersen(), from_nx(nx.petersen_graph()))


@pytest.mark.parametrize("name", "ABCD")
@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_l1_families(name, n):
    g = gen.family_L1(name, n)
    L1 = gen.local_graph_L(1)
    assert valency(g) == 5 and is_vertex_transitive(g)
    assert all(are_isomorphic(local_graph(g, v), L1) for v in range(g.n))


def test_l1_family_examples():
    assert gen.family_L1("A", 4) == gen.circulant(16, [1, 4, 8])
    assert gen.family_L1("D", 4) == cartesian_product(gen.h_graph(4), K(2))
    z = GroupSpec.product(5, 4)
    assert gen.family_L1("C", 5) == cayley(z, ConnectionSet.closure(z, [(1, 0), (0, 1), (0, 2)]))
    with pytest.raises(GraphError):
        gen.family_L1("A", 3)
    with pytest.raises(GraphError):
        gen.family_L1("E", 5)


def test_standard_graphs():
    assert gen.standard("K", 5) == K(5)
    assert gen.standard("E", 3).num_edges == 0
    assert gen.standard("Kmn", 2, 3).num_edges == 6
    assert valency(complement(gen.standard("C", 8))) == 5
    with pytest.raises(GraphError):
        gen.standard("Q", 3)
    with pytest.raises(GraphError):
        gen.standard("C", 2)


def test_local_graph_catalogue():
    L = {i: gen.local_graph_L(i) for i in range(1, 7)}
    assert are_isomorphic(L[1], gen.Graph.from_edges(5, [(0, 1), (1, 2), (0, 2)]))
    for i, x in L.items():
        assert x.n == 5
        assert [len(c) for c in maximal_cliques(x)].count(3) == 1
        assert max(x.degree(v) for v in range(5)) < 4
    assert not any(are_isomorphic(L[i], L[j]) for i, j in combinations(L, 2))
    assert are_isomorphic(L[4], local_graph(cartesian_product(K(3), K(4)), 0))
    assert are_isomorphic(L[6], local_graph(complement(C(8)), 0))
    with pytest.raises(GraphError):
        gen.local_graph_L(7)


@pytest.mark.parametrize(
    "family,params,n",
    [("K", [4], 4), ("H", [3], 12), ("J", [7, 3, 1], 35), ("L1B", [4], 16), ("circulant", [12, 1, 4, 6], 12),
     ("line-K", [6], 15), ("line-Kmm", [3], 9), ("coC", [8], 8), ("petersen", [], 10), ("L", [3], 5)],
)
def test_named_dispatch(family, params, n):
    assert gen.named(family, params).n == n


def test_c3_cn_matches_networkx_product():
    for n in range(3, 8):
        ref = from_nx(nx.cartesian_product(nx.cycle_graph(3), nx.cycle_graph(n)))
        assert are_isomorphic(gen.c3_cn(n), ref)
        assert nx.is_isomorphic(to_nx(gen.c3_cn(n)), to_nx(ref))
