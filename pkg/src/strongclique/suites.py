"""Replay suites: each one re-derives a classification or structural fact
over explicit graphs and the desk-scale corpus.

Classification suites are falsification probes.  The corpus contains only
Cayley graphs of a few group kinds plus named graphs, so a passing suite means
"no counterexample in the corpus and every listed graph qualifies", not a
proof over all vertex-transitive graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import generators as gen
from .cliques import (
    chromatic_number,
    clique_cover_number,
    clique_graph,
    clique_number,
    independence_number,
    iter_maximal_cliques,
    maximal_cliques,
    maximal_independent_sets,
)
from .corpus import CorpusSpec, Entry, _build_cached, build_corpus
from .graph import (
    Graph,
    cartesian_product,
    complement,
    is_connected,
    is_reducible,
    lexicographic_product,
    line_graph,
    local_graph,
    twin_quotient,
    valency,
)
from .io import to_graph6
from .perm import Permutation, are_isomorphic, automorphisms, is_vertex_transitive, set_orbit
from .report import PropertyReport, analyze, analyze_many
from .strong import (
    cis_by_enumeration,
    cis_by_strong_pair,
    has_strong_clique,
    has_strong_independent_set,
    half_order_clique_check,
    irreducible_intersection_check,
    is_strong_clique,
    localizable_by_clique_graph,
    localizable_partition,
    strong_by_domination,
    strong_by_enumeration,
    strong_cliques,
    vt_strong_criterion,
)


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.label}{tail}"


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    reports: list[PropertyReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(ok), detail))
        return bool(ok)

    def expect_none(self, label: str, bad: Sequence[str], total: int | None = None) -> bool:
        """Pass iff ``bad`` is empty; the first offenders are named in the detail."""
        if bad:
            detail = f"{len(bad)} counterexample(s): " + "; ".join(bad[:5])
        else:
            detail = f"{total} checked" if total is not None else ""
        return self.check(label, not bad, detail)


def _tag(e: Entry) -> str:
    return f"{e.graph_id} [{to_graph6(e.graph)}]"


_analysis_cache: dict[tuple[str, Graph], PropertyReport] = {}


def clear_caches() -> None:
    """Forget memoised reports and corpora (used to time suites from cold)."""
    _analysis_cache.clear()
    _build_cached.cache_clear()


def _report(gid: str, g: Graph) -> PropertyReport:
    key = (gid, g)
    if key not in _analysis_cache:
        _analysis_cache[key] = analyze(gid, g)
    return _analysis_cache[key]


def _reports(entries: Iterable[Entry]) -> list[PropertyReport]:
    return merge_reports([_report(e.graph_id, e.graph) for e in entries])


def merge_reports(reports: Iterable[PropertyReport]) -> list[PropertyReport]:
    """Drop repeats of the same (id, graph) and sort by graph id."""
    seen = {}
    for r in reports:
        seen.setdefault((r.graph_id, r.graph6), r)
    return sorted(seen.values(), key=lambda r: (r.graph_id, r.graph6))


def _matches(g: Graph, listed: Sequence[Entry]) -> str | None:
    for e in listed:
        if are_isomorphic(g, e.graph):
            return e.graph_id
    return None


def _corpus(spec: CorpusSpec | None, default: CorpusSpec, corpus_max: int | None) -> list[Entry]:
    spec = spec or default
    if corpus_max is not None:
        spec = CorpusSpec(spec.valencies, corpus_max, spec.group_kinds, spec.named, spec.connected_only)
    return build_corpus(spec)


# ---------------------------------------------------------------------------
# J(7,3,1)


def suite_johnson(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("johnson-cis")
    g = gen.gen_johnson(7, 3, 1)
    subs = gen.johnson_subsets(7, 3)
    idx = {s: i for i, s in enumerate(subs)}

    def vs(*labels: int) -> tuple[int, ...]:
        return tuple(sorted(idx[tuple(int(ch) for ch in str(lab))] for lab in labels))

    res.check("order 35", g.n == 35, str(g.n))
    res.check("18-regular", valency(g) == 18, str(valency(g)))
    res.check("vertex-transitive", is_vertex_transitive(g))
    cl = maximal_cliques(g)
    res.check("30 maximal cliques", len(cl) == 30, str(len(cl)))
    res.check("every maximal clique has size 7", {len(c) for c in cl} == {7}, str(sorted({len(c) for c in cl})))
    mis = maximal_independent_sets(g)
    res.check("every maximal independent set has size 5", {len(i) for i in mis} == {5}, str(sorted({len(i) for i in mis})))
    res.check(
        "named independent sets are maximal",
        vs(123, 456, 127, 137, 237) in mis and vs(123, 124, 125, 126, 127) in mis,
    )
    cm = [sum(1 << v for v in c) for c in cl]
    counts = {(u, v): sum(1 for m in cm if m >> u & 1 and m >> v & 1) for u, v in g.edges()}
    res.check("every edge in exactly 2 maximal cliques", set(counts.values()) == {2}, str(sorted(set(counts.values()))))
    c1 = vs(123, 145, 167, 246, 257, 347, 356)
    c2 = vs(123, 145, 167, 247, 256, 346, 357)
    res.check("C1 and C2 are maximal cliques", c1 in cl and c2 in cl)
    res.check("C1 is strong (both methods)", is_strong_clique(g, c1, "both").is_strong)
    res.check("C1 meets cardinality criterion", vt_strong_criterion(g, c1, mis))
    res.check(
        "{123,124,125,126,127} is a strong independent set",
        strong_by_enumeration(complement(g), vs(123, 124, 125, 126, 127)).is_strong,
    )
    cis_a = cis_by_enumeration(g)
    cis_b = cis_by_strong_pair(g)
    res.check("CIS", cis_a and cis_b, f"enumeration={cis_a}, strong pair={cis_b}")
    part = localizable_partition(g)
    res.check("not localizable (exact cover)", part is None)
    res.check("not localizable (clique-graph criterion)", not localizable_by_clique_graph(g))
    theta = clique_cover_number(g)
    res.check("clique cover number exceeds 5", theta > 5, str(theta))
    q = clique_graph(g, cl)
    res.check("clique graph has 30 vertices", q.n == 30, str(q.n))
    res.check("clique graph vertex-transitive", is_vertex_transitive(q))
    wq, aq = clique_number(q), independence_number(q)
    res.check("clique graph omega >= 7", wq >= 7, str(wq))
    res.check("clique graph alpha <= 4", aq <= 4, str(aq))
    # the 7-cycle (1 2 ... 7) acting on 3-subsets
    shift = Permutation(tuple(idx[tuple(sorted(x % 7 + 1 for x in s))] for s in subs))
    orb = set_orbit([shift], c1)
    pairwise = all(set(a) & set(b) for a, b in combinations(orb, 2))
    res.check("7-cycle orbit of C1: 7 pairwise meeting cliques", len(orb) == 7 and pairwise, str(len(orb)))
    order = automorphisms(g).order()
    res.check("|Aut| divisible by 5040", order % 5040 == 0, str(order))
    res.reports = [_report("J(7,3,1)", g)]
    return res


# ---------------------------------------------------------------------------
# corpus-wide equivalences

SMALL_VALENCY = CorpusSpec(valencies=(1, 2, 3, 4, 5), max_order=24)


def suite_strong_criterion(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("strong-criterion")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    bad, nclq = [], 0
    for e in corpus:
        g = e.graph
        if not is_vertex_transitive(g):
            bad.append(f"{_tag(e)} not vertex-transitive")
            continue
        mis = maximal_independent_sets(g)
        for c in maximal_cliques(g):
            nclq += 1
            if strong_by_enumeration(g, c, mis).is_strong != vt_strong_criterion(g, c, mis):
                bad.append(f"{_tag(e)} clique {c}")
    res.check("at least 40 vertex-transitive corpus graphs", len(corpus) >= 40, str(len(corpus)))
    res.expect_none("direct strong test equals cardinality criterion", bad, nclq)
    res.reports = _reports(corpus)
    return res


def suite_strong_methods(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("strong-methods")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    bad, nclq = [], 0
    for e in corpus:
        g = e.graph
        mis = maximal_independent_sets(g)
        for c in maximal_cliques(g):
            nclq += 1
            a = strong_by_enumeration(g, c, mis)
            b = strong_by_domination(g, c)
            if a.is_strong != b.is_strong:
                bad.append(f"{_tag(e)} clique {c}")
    res.expect_none("enumeration and domination methods agree", bad, nclq)
    res.reports = _reports(corpus)
    return res


def brute_force_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every nonempty vertex subset that is a clique and cannot be extended."""
    out = []
    full = g.n
    for mask in range(1, 1 << full):
        vs = [v for v in range(full) if mask >> v & 1]
        if not g.is_clique(vs):
            continue
        if any(all(g.has_edge(u, v) for v in vs) for u in range(full) if not mask >> u & 1):
            continue
        out.append(tuple(vs))
    return sorted(out)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def suite_bk_oracle(spec=None, corpus_max=None, count: int = 200, seed: int = 7919) -> SuiteResult:
    res = SuiteResult("bk-oracle")
    rng = random.Random(seed)
    bad = []
    for t in range(count):
        n = rng.randint(0, 12)
        g = random_graph(rng, n, rng.choice((0.2, 0.4, 0.5, 0.6, 0.8)))
        if maximal_cliques(g) != brute_force_maximal_cliques(g):
            bad.append(f"random #{t} [{to_graph6(g)}]")
    res.expect_none(f"Bron-Kerbosch equals subset enumeration on {count} random graphs", bad, count)
    return res


def suite_small_valency(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("small-valency")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    reps = _reports(corpus)
    bad = [f"{r.graph_id} [{r.graph6}]" for r in reps if r.has_strong_clique != r.localizable]
    res.expect_none("strong clique iff localizable (valency <= 5)", bad, len(reps))
    res.reports = reps
    return res


# ---------------------------------------------------------------------------
# classifications by valency


def _classify(res: SuiteResult, corpus: list[Entry], listed: list[Entry], extra_listed: Sequence[Entry] = ()) -> None:
    for e in list(listed) + list(extra_listed):
        r = _report(e.graph_id, e.graph)
        res.check(f"{e.graph_id} has a strong clique and is localizable", r.has_strong_clique and r.localizable)
    bad, strong = [], []
    for e in corpus:
        r = _report(e.graph_id, e.graph)
        if r.has_strong_clique:
            strong.append(e)
            if _matches(e.graph, listed) is None:
                bad.append(_tag(e))
            if not r.localizable:
                bad.append(f"{_tag(e)} has a strong clique but is not localizable")
    res.expect_none("every corpus graph with a strong clique is listed", bad, len(corpus))
    # listed graphs of corpus size must be found with a strong clique there
    in_range = [e for e in listed if e.graph.n <= max(c.graph.n for c in corpus)]
    missing = [e.graph_id for e in in_range if _matches(e.graph, strong) is None]
    res.check("listed graphs in the corpus are recognised", not missing, ", ".join(missing))


def suite_cubic(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("cubic")
    corpus = _corpus(spec, CorpusSpec(valencies=(3,), max_order=20), corpus_max)
    listed = [
        Entry("K4", gen.complete(4)),
        Entry("K3,3", gen.complete_bipartite(3)),
        Entry("co-C6", complement(gen.cycle(6))),
    ]
    _classify(res, corpus, listed)
    strong = sorted(e.graph_id for e in corpus if _report(e.graph_id, e.graph).has_strong_clique)
    res.check("exactly three corpus graphs have a strong clique", len(strong) == 3, ", ".join(strong))
    res.reports = _reports(corpus)
    return res


def quartic_list(max_order: int) -> list[Entry]:
    out = [
        Entry("K4,4", gen.complete_bipartite(4)),
        Entry("K5", gen.complete(5)),
        Entry("K3[2K1]", lexicographic_product(gen.complete(3), gen.empty_graph(2))),
        Entry("L(K3,3)", line_graph(gen.complete_bipartite(3))),
    ]
    out += [Entry(f"H{n}", gen.h_graph(n)) for n in range(2, max_order // 4 + 1)]
    out += [Entry(f"Cay(Z{3 * k},+-1,+-{k})", gen.circulant(3 * k, [1, k])) for k in range(2, max_order // 3 + 1)]
    out += [Entry(f"C3xC{n}", gen.c3_cn(n)) for n in range(3, max_order // 3 + 1)]
    return out


def suite_quartic(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("quartic")
    corpus = _corpus(spec, CorpusSpec(valencies=(4,), max_order=24), corpus_max)
    bound = max(e.graph.n for e in corpus)
    listed = quartic_list(bound)
    fixed = (
        [Entry(f"H{n}", gen.h_graph(n)) for n in range(2, 7)]
        + [Entry(f"Cay(Z{3 * k},+-1,+-{k})", gen.circulant(3 * k, [1, k])) for k in range(2, 6)]
        + [Entry(f"C3xC{n}", gen.c3_cn(n)) for n in range(3, 8)]
    )
    names = {e.graph_id for e in listed}
    _classify(res, corpus, listed, [e for e in fixed if e.graph_id not in names])
    res.reports = _reports(corpus)
    return res


def quintic_omega_list() -> dict[int, Entry]:
    return {
        2: Entry("K5,5", gen.complete_bipartite(5)),
        3: Entry("Cay(Z12,+-1,+-4,6)", gen.circulant(12, [1, 4, 6])),
        5: Entry("K5xK2", cartesian_product(gen.complete(5), gen.complete(2))),
        6: Entry("K6", gen.complete(6)),
    }


def quintic_list() -> list[Entry]:
    om = quintic_omega_list()
    return [
        om[6],
        Entry("co-C8", complement(gen.cycle(8))),
        Entry("C4[K2]", lexicographic_product(gen.cycle(4), gen.complete(2))),
        om[2],
        om[5],
        Entry("K3xK4", cartesian_product(gen.complete(3), gen.complete(4))),
        om[3],
    ]


def suite_quintic(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("quintic")
    corpus = _corpus(spec, CorpusSpec(valencies=(5,), max_order=24), corpus_max)
    L1 = gen.local_graph_L(1)
    for w, e in quintic_omega_list().items():
        r = _report(e.graph_id, e.graph)
        res.check(f"{e.graph_id}: omega {w}, strong clique, localizable", r.omega == w and r.has_strong_clique and r.localizable, f"omega={r.omega}")
    listed = quintic_list()
    for e in listed:
        r = _report(e.graph_id, e.graph)
        res.check(f"{e.graph_id}: 5-regular with a strong clique", r.valency == 5 and r.has_strong_clique and r.localizable)
    for e in listed[1:3] + listed[5:6]:
        res.check(f"{e.graph_id}: omega 4, local graph not L1", clique_number(e.graph) == 4 and not are_isomorphic(local_graph(e.graph, 0), L1))
    for name in "ABCD":
        for n in (4, 5, 6):
            g = gen.family_L1(name, n)
            locs = all(are_isomorphic(local_graph(g, v), L1) for v in range(g.n))
            sc = has_strong_clique(g)
            part = localizable_partition(g)
            res.check(
                f"L1 family {name} n={n}: 5-regular VT, local graph L1, strong 4-clique, localizable",
                valency(g) == 5 and is_vertex_transitive(g) and locs and sc is not None and len(sc) == 4 and part is not None,
            )
    om = quintic_omega_list()
    bad_omega, bad_local = [], []
    for e in corpus:
        r = _report(e.graph_id, e.graph)
        if not r.has_strong_clique:
            continue
        if r.omega != 4:
            if r.omega not in om or not are_isomorphic(e.graph, om[r.omega].graph):
                bad_omega.append(_tag(e))
        elif not are_isomorphic(local_graph(e.graph, 0), L1) and _matches(e.graph, listed) is None:
            bad_local.append(_tag(e))
    res.expect_none("omega != 4 corpus graphs with a strong clique are the listed ones", bad_omega, len(corpus))
    res.expect_none("local graph not L1: corpus graphs with a strong clique are listed", bad_local, len(corpus))
    res.reports = _reports(corpus)
    return res


# ---------------------------------------------------------------------------
# local graphs


def all_graphs(n: int) -> list[Graph]:
    """Graphs on ``n`` vertices, one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    reps: list[Graph] = []
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if not any(are_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def unique_max_clique_star(x: Graph) -> bool:
    """Unique maximum clique C, an edge outside C, every edge meeting C."""
    cl = maximal_cliques(x)
    if not cl:
        return False
    w = max(len(c) for c in cl)
    tops = [c for c in cl if len(c) == w]
    if len(tops) != 1:
        return False
    c = set(tops[0])
    edges = x.edges()
    return any(not (u in c and v in c) for u, v in edges) and all(u in c or v in c for u, v in edges)


def one_triangle_no_universal(x: Graph) -> bool:
    cl = maximal_cliques(x)
    triangles = [c for c in cl if len(c) == 3]
    return (
        len(triangles) == 1
        and all(len(c) <= 3 for c in cl)
        and all(x.degree(v) < x.n - 1 for v in range(x.n))
    )


def suite_local_graphs(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("local-graphs")
    corpus = _corpus(spec, CorpusSpec(valencies=(3, 4, 5), max_order=24), corpus_max)
    Ls = {i: gen.local_graph_L(i) for i in range(1, 7)}
    five = all_graphs(5)
    shapes = [x for x in five if one_triangle_no_universal(x)]
    res.check("exactly six five-vertex graphs with one triangle and no universal vertex", len(shapes) == 6, str(len(shapes)))
    res.check("L1..L6 are those six", all(sum(are_isomorphic(x, L) for L in Ls.values()) == 1 for x in shapes))
    res.check("L1 is K3 plus two isolated vertices", Ls[1].num_edges == 3 and sorted(Ls[1].degree(v) for v in range(5)) == [0, 0, 2, 2, 2])
    res.check("L4 is the local graph of K3xK4", are_isomorphic(Ls[4], local_graph(cartesian_product(gen.complete(3), gen.complete(4)), 0)))
    res.check("L6 is the local graph of co-C8", are_isomorphic(Ls[6], local_graph(complement(gen.cycle(8)), 0)))
    star_like = {i for i, L in Ls.items() if unique_max_clique_star(L)}
    res.check("L2 and L3 are exactly the L-graphs with every edge meeting the triangle", star_like == {2, 3}, str(sorted(star_like)))

    locals_ = [(e, local_graph(e.graph, 0)) for e in corpus]
    forbidden = {k: [x for x in all_graphs(k) if unique_max_clique_star(x)] for k in (3, 4, 5)}
    bad = [
        _tag(e) for e, loc in locals_
        if any(are_isomorphic(loc, x) for x in forbidden.get(loc.n, ()))
    ]
    res.expect_none("no corpus graph has a local graph with a unique maximum clique met by every edge", bad, len(corpus))
    with_L5 = [_tag(e) for e, loc in locals_ if are_isomorphic(loc, Ls[5])]
    res.expect_none("no corpus graph has local graph L5", with_L5, len(corpus))
    with_L6 = [e for e, loc in locals_ if are_isomorphic(loc, Ls[6])]
    coc8 = complement(gen.cycle(8))
    res.check(
        "co-C8 is the only corpus graph with local graph L6",
        len(with_L6) == 1 and are_isomorphic(with_L6[0].graph, coc8),
        ", ".join(e.graph_id for e in with_L6),
    )
    with_L4 = [e for e, loc in locals_ if are_isomorphic(loc, Ls[4])]
    strong_L4 = [e for e in with_L4 if _report(e.graph_id, e.graph).has_strong_clique]
    k3k4 = cartesian_product(gen.complete(3), gen.complete(4))
    res.check(
        "among local graph L4, exactly K3xK4 has a strong clique",
        len(strong_L4) == 1 and are_isomorphic(strong_L4[0].graph, k3k4),
        f"{len(with_L4)} with L4: " + ", ".join(e.graph_id for e in strong_L4),
    )
    bad_univ = []
    c4k2 = lexicographic_product(gen.cycle(4), gen.complete(2))
    for e, loc in locals_:
        if valency(e.graph) == 5 and clique_number(e.graph) == 4 and any(loc.degree(v) == loc.n - 1 for v in range(loc.n)):
            strong = _report(e.graph_id, e.graph).has_strong_clique
            if strong != are_isomorphic(e.graph, c4k2):
                bad_univ.append(_tag(e))
    res.expect_none("5-valent, omega 4, universal local vertex: strong clique iff C4[K2]", bad_univ)
    bad_irred = [_tag(e) for e in corpus if valency(e.graph) == 5 and clique_number(e.graph) == 4 and is_reducible(e.graph)]
    res.expect_none("5-valent corpus graphs with omega 4 are irreducible", bad_irred)
    res.reports = _reports(corpus)
    return res


# ---------------------------------------------------------------------------
# structural checks


def line_complete_examples() -> list[Entry]:
    return [Entry("L(K6)", line_graph(gen.complete(6))), Entry("L(K8)", line_graph(gen.complete(8)))]


def suite_intersection_bound(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("intersection-bound")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    extra = [Entry("J(7,3,1)", gen.gen_johnson(7, 3, 1))] + line_complete_examples()
    bad, n = [], 0
    corpus = corpus + extra
    for e in corpus:
        if is_reducible(e.graph):
            continue
        n += 1
        if not irreducible_intersection_check(e.graph):
            bad.append(_tag(e))
    res.expect_none("strong clique meets other maximal cliques in < |C|-1 vertices", bad, n)
    res.reports = _reports(corpus)
    return res


def suite_edge_strong(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("edge-strong")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    bad, n = [], 0
    for e in corpus:
        g = e.graph
        m = valency(g)
        if m is None or not is_connected(g):
            continue
        n += 1
        has_edge_strong = any(len(c) == 2 for c in strong_cliques(g))
        if has_edge_strong != are_isomorphic(g, gen.complete_bipartite(m)):
            bad.append(_tag(e))
    res.expect_none("strong clique of size 2 iff K_{m,m}", bad, n)
    res.reports = _reports(corpus)
    return res


def suite_strong_maximum(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("strong-maximum")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max) + line_complete_examples()
    bad, n = [], 0
    for e in corpus:
        r = _report(e.graph_id, e.graph)
        if not (r.vertex_transitive and r.has_strong_clique):
            continue
        n += 1
        sizes = {len(c) for c in strong_cliques(e.graph)}
        if not r.well_covered or sizes != {r.omega}:
            bad.append(_tag(e))
    res.expect_none("strong clique implies well-covered and every strong clique maximum", bad, n)
    res.reports = _reports(corpus)
    return res


def suite_localizable_coloring(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("localizable-coloring")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max) + line_complete_examples()
    corpus.append(Entry("J(7,3,1)", gen.gen_johnson(7, 3, 1)))
    bad, n, neg = [], 0, 0
    for e in corpus:
        r = _report(e.graph_id, e.graph)
        if not (r.vertex_transitive and r.has_strong_clique):
            continue
        n += 1
        co = complement(e.graph)
        equal = chromatic_number(co) == clique_number(co)
        neg += not r.localizable
        if equal != r.localizable:
            bad.append(_tag(e))
    res.expect_none("localizable iff chi(complement) = omega(complement)", bad, n)
    res.check("non-localizable cases exercised", neg >= 3, str(neg))
    res.reports = _reports(corpus)
    return res


def half_order_examples() -> list[Entry]:
    K = gen.complete
    return [
        Entry("C4", gen.cycle(4)),
        Entry("H2", gen.h_graph(2)),
        Entry("C4[K2]", lexicographic_product(gen.cycle(4), K(2))),
        Entry("K3[2K1]", lexicographic_product(K(3), gen.empty_graph(2))),
        Entry("co-C6", complement(gen.cycle(6))),
        Entry("co-C8", complement(gen.cycle(8))),
        Entry("K5xK2", cartesian_product(K(5), K(2))),
    ]


def suite_half_order(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("half-order")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max) + half_order_examples()
    bad, n = [], 0
    for e in corpus:
        g = e.graph
        if g.n % 2 or not any(2 * len(c) == g.n for c in maximal_cliques(g)):
            continue
        n += 1
        if not half_order_clique_check(g):
            bad.append(_tag(e))
    res.check("half-order examples present", n >= len(half_order_examples()), str(n))
    res.expect_none("maximal clique of half the order gives a two-clique partition", bad, n)
    res.reports = _reports(corpus)
    return res


def suite_clique_graph(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("clique-graph-criterion")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max) + line_complete_examples()
    corpus.append(Entry("J(7,3,1)", gen.gen_johnson(7, 3, 1)))
    bad, n = [], 0
    for e in corpus:
        r = _report(e.graph_id, e.graph)
        if not (r.vertex_transitive and r.cis):
            continue
        n += 1
        if localizable_by_clique_graph(e.graph) != r.localizable:
            bad.append(_tag(e))
    res.expect_none("CIS: localizable iff alpha(clique graph) = alpha", bad, n)
    res.reports = _reports(corpus)
    return res


def suite_line_complete(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("line-complete")
    for k, e in zip((3, 4), line_complete_examples()):
        g = e.graph
        r = _report(e.graph_id, g)
        res.check(f"{e.graph_id}: vertex-transitive", r.vertex_transitive)
        res.check(f"{e.graph_id}: has strong cliques", r.has_strong_clique)
        res.check(f"{e.graph_id}: omega = |V|/{k}", r.omega * k == g.n, f"omega={r.omega}, |V|={g.n}")
        res.check(f"{e.graph_id}: not localizable", not r.localizable)
        res.reports.append(r)
    return res


def suite_cis_pair(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("cis-pair")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max) + line_complete_examples()
    corpus.append(Entry("J(7,3,1)", gen.gen_johnson(7, 3, 1)))
    bad, ncis = [], 0
    for e in corpus:
        g = e.graph
        a = cis_by_enumeration(g)
        ncis += a
        b = has_strong_clique(g, True) is not None and has_strong_independent_set(g, True) is not None
        if a != b:
            bad.append(_tag(e))
    res.expect_none("CIS iff strong clique and strong independent set", bad, len(corpus))
    res.check("CIS graphs exercised", ncis >= 3, str(ncis))
    res.reports = _reports(corpus)
    return res


def suite_reducible(spec=None, corpus_max=None) -> SuiteResult:
    res = SuiteResult("reducible-lex")
    corpus = _corpus(spec, SMALL_VALENCY, corpus_max)
    bad, n = [], 0
    for e in corpus:
        g = e.graph
        if not is_reducible(g):
            continue
        n += 1
        q, classes = twin_quotient(g)
        t = len(classes[0])
        ok = (
            all(len(c) == t for c in classes)
            and t >= 2
            and not is_reducible(q)
            and is_vertex_transitive(q)
            and are_isomorphic(g, lexicographic_product(q, gen.empty_graph(t)))
        )
        if not ok:
            bad.append(_tag(e))
    res.expect_none("reducible vertex-transitive graph is G'[tK1] with G' irreducible", bad, n)
    res.reports = _reports(corpus)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "johnson-cis": suite_johnson,
    "strong-criterion": suite_strong_criterion,
    "strong-methods": suite_strong_methods,
    "bk-oracle": suite_bk_oracle,
    "cubic": suite_cubic,
    "quartic": suite_quartic,
    "quintic": suite_quintic,
    "small-valency": suite_small_valency,
    "local-graphs": suite_local_graphs,
    "intersection-bound": suite_intersection_bound,
    "edge-strong": suite_edge_strong,
    "strong-maximum": suite_strong_maximum,
    "localizable-coloring": suite_localizable_coloring,
    "half-order": suite_half_order,
    "clique-graph-criterion": suite_clique_graph,
    "line-complete": suite_line_complete,
    "cis-pair": suite_cis_pair,
    "reducible-lex": suite_reducible,
}


class UnknownSuite(KeyError):
    pass


def prewarm(entries: Sequence[Entry], jobs: int) -> None:
    """Analyse ``entries`` in a worker pool and cache the reports."""
    todo = [(e.graph_id, e.graph) for e in entries if (e.graph_id, e.graph) not in _analysis_cache]
    for (gid, g), r in zip(todo, analyze_many(todo, jobs=jobs, sort=False)):
        _analysis_cache[(gid, g)] = r


def verify_theorem(
    name: str, spec: CorpusSpec | None = None, corpus_max: int | None = None, jobs: int = 1
) -> SuiteResult:
    """Run suite ``name``.  ``spec`` replaces the suite's default corpus,
    ``corpus_max`` its order bound; ``jobs > 1`` analyses the corpus in parallel first."""
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None
    if jobs > 1:
        prewarm(_corpus(spec, SMALL_VALENCY, corpus_max), jobs)
    return fn(spec, corpus_max)
