"""Desk-scale corpus of vertex-transitive graphs.

Connected Cayley graphs over cyclic groups, two-factor abelian groups
``Z_a x Z_b`` (``b | a``) and dihedral groups, plus the named graphs, all
deduplicated up to isomorphism.  This is not a census of all
vertex-transitive graphs: classification checks run against it can find
counterexamples but cannot prove completeness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterator, NamedTuple

from . import generators as gen
from .generators import ConnectionSet, GroupSpec, cayley
from .graph import Graph, cartesian_product, complement, is_connected, lexicographic_product, line_graph, valency
from .perm import are_isomorphic, transitive_invariant

log = logging.getLogger(__name__)

DESK_CAP = 64
DEFAULT_ORDER_BOUND = {1: 32, 2: 32, 3: 32, 4: 32, 5: 24}


class Entry(NamedTuple):
    graph_id: str
    graph: Graph


@dataclass(frozen=True)
class CorpusSpec:
    valencies: tuple[int, ...] = (3, 4, 5)
    max_order: int | None = None  # None: per-valency default bound
    group_kinds: tuple[str, ...] = ("cyclic", "product", "dihedral")
    named: bool = True
    connected_only: bool = True

    def __post_init__(self):
        object.__setattr__(self, "valencies", tuple(sorted(set(self.valencies))))
        if self.max_order is not None and not 1 <= self.max_order <= DESK_CAP:
            raise ValueError(f"order bound must lie in [1, {DESK_CAP}]")
        for kind in self.group_kinds:
            if kind not in ("cyclic", "product", "dihedral"):
                raise ValueError(f"unsupported group kind {kind!r}")

    def bound(self, k: int) -> int:
        return self.max_order if self.max_order is not None else DEFAULT_ORDER_BOUND.get(k, 24)


# ---------------------------------------------------------------------------
# groups and connection sets


def _groups(kinds: tuple[str, ...], order: int) -> list[GroupSpec]:
    out = []
    if "cyclic" in kinds:
        out.append(GroupSpec.cyclic(order))
    if "product" in kinds:
        for b in range(2, order + 1):
            if order % (b * b) == 0:
                a = order // b
                if a % b == 0:
                    out.append(GroupSpec.product(a, b))
    if "dihedral" in kinds and order % 2 == 0 and order >= 6:
        out.append(GroupSpec.dihedral(order // 2))
    return out


def _units(n: int) -> list[int]:
    return [u for u in range(1, n) if gcd(u, n) == 1] or [1]


def _automorphism_maps(grp: GroupSpec) -> list[list[int]]:
    """Some group automorphisms, as element-index maps, used to skip
    connection sets giving isomorphic Cayley graphs."""
    if grp.kind == "cyclic":
        n = grp.order
        return [[(u * a) % n for a in range(n)] for u in _units(n)]
    if grp.kind == "product":
        maps = []
        for us in _product_units(grp.params):
            maps.append([grp.encode(tuple(u * x for u, x in zip(us, grp.digits(a)))) for a in range(grp.order)])
        return maps
    n = grp.params[0]
    maps = []
    perms = grp._perms
    for u in _units(n):
        for c in range(n):
            m = []
            for p in perms:
                k = p[0]
                if p[1] == (k + 1) % n:  # rotation i -> i + k
                    img = tuple((i + u * k) % n for i in range(n))
                else:  # reflection i -> k - i
                    img = tuple((u * k + c - i) % n for i in range(n))
                m.append(grp.encode(img))
            maps.append(m)
    return maps


def _product_units(params: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = [()]
    for p in params:
        out = [t + (u,) for t in out for u in _units(p)]
    return out


def connection_sets(grp: GroupSpec, k: int) -> Iterator[ConnectionSet]:
    """Inverse-closed identity-free subsets of size ``k``, one per orbit of
    the automorphisms from :func:`_automorphism_maps`."""
    ident = grp.identity
    invols, pairs = [], []
    for a in grp.elements():
        if a == ident:
            continue
        b = grp.inv(a)
        if b == a:
            invols.append((a,))
        elif a < b:
            pairs.append((a, b))
    maps = _automorphism_maps(grp)
    seen: set[tuple[int, ...]] = set()
    for npairs in range(k // 2, -1, -1):
        ninv = k - 2 * npairs
        if ninv > len(invols) or npairs > len(pairs):
            continue
        for ps in combinations(pairs, npairs):
            for iv in combinations(invols, ninv):
                elems = tuple(sorted(x for blk in ps + iv for x in blk))
                if elems in seen:
                    continue
                for m in maps:
                    seen.add(tuple(sorted(m[x] for x in elems)))
                seen.add(elems)
                yield ConnectionSet(grp, frozenset(elems))


def element_label(grp: GroupSpec, a: int) -> str:
    if grp.kind == "cyclic":
        return str(a)
    if grp.kind == "product":
        return "(" + ",".join(map(str, grp.digits(a))) + ")"
    p = grp._perms[a]
    n = len(p)
    k = p[0]
    return f"r{k}" if p[1] == (k + 1) % n else f"s{k}"


def cayley_id(grp: GroupSpec, s: ConnectionSet) -> str:
    return f"Cay({grp},{{{','.join(element_label(grp, a) for a in s.sorted())}}})"


# ---------------------------------------------------------------------------
# named graphs


def named_graphs() -> list[Entry]:
    """Every named vertex-transitive family at small parameters."""
    K, C = gen.complete, gen.cycle
    out = [
        Entry("K4", K(4)),
        Entry("K5", K(5)),
        Entry("K6", K(6)),
        Entry("K3,3", gen.complete_bipartite(3)),
        Entry("K4,4", gen.complete_bipartite(4)),
        Entry("K5,5", gen.complete_bipartite(5)),
        Entry("co-C6", complement(C(6))),
        Entry("co-C8", complement(C(8))),
        Entry("Petersen", gen.petersen()),
        Entry("K3[2K1]", lexicographic_product(K(3), gen.empty_graph(2))),
        Entry("L(K3,3)", line_graph(gen.complete_bipartite(3))),
        Entry("C4[K2]", lexicographic_product(C(4), K(2))),
        Entry("K5xK2", cartesian_product(K(5), K(2))),
        Entry("K3xK4", cartesian_product(K(3), K(4))),
        Entry("Cay(Z12,{1,4,6,8,11})", gen.circulant(12, [1, 4, 6])),
    ]
    for n in range(2, 9):
        out.append(Entry(f"H{n}", gen.h_graph(n)))
    for k in range(2, 11):
        out.append(Entry(f"Cay(Z{3 * k},{{1,{k},{2 * k},{3 * k - 1}}})", gen.circulant(3 * k, [1, k])))
    for n in range(3, 11):
        out.append(Entry(f"C3xC{n}", gen.c3_cn(n)))
    for name in "ABCD":
        for n in range(4, 7):
            out.append(Entry(f"L1{name}{n}", gen.family_L1(name, n)))
    for n in range(5, 11):
        out.append(Entry(f"C{n}[K2]", lexicographic_product(C(n), K(2))))
    for n in range(3, 9):
        out.append(Entry(f"prism{n}", cartesian_product(C(n), K(2))))
    return out


# ---------------------------------------------------------------------------
# deduplication


class _Dedup:
    def __init__(self):
        self.buckets: dict[tuple, list[Entry]] = {}
        self.entries: list[Entry] = []

    def add(self, entry: Entry) -> bool:
        g = entry.graph
        key = (g.n, g.num_edges, transitive_invariant(g))
        bucket = self.buckets.setdefault(key, [])
        for other in bucket:
            if are_isomorphic(g, other.graph):
                return False
        bucket.append(entry)
        self.entries.append(entry)
        return True


def _wanted(spec: CorpusSpec, g: Graph) -> bool:
    k = valency(g)
    if k is None or k not in spec.valencies or g.n > spec.bound(k):
        return False
    return not spec.connected_only or is_connected(g)


def iter_cayley(spec: CorpusSpec) -> Iterator[Entry]:
    top = max((spec.bound(k) for k in spec.valencies), default=0)
    for order in range(1, top + 1):
        for grp in _groups(spec.group_kinds, order):
            for k in spec.valencies:
                if order > spec.bound(k) or k >= order:
                    continue
                for s in connection_sets(grp, k):
                    g = cayley(grp, s)
                    if _wanted(spec, g):
                        yield Entry(cayley_id(grp, s), g)


def build_corpus(spec: CorpusSpec = CorpusSpec()) -> list[Entry]:
    """Corpus entries, named graphs first, sorted by (order, valency, id)."""
    return list(_build_cached(spec))


@lru_cache(maxsize=16)
def _build_cached(spec: CorpusSpec) -> tuple[Entry, ...]:
    dd = _Dedup()
    if spec.named:
        for e in named_graphs():
            if _wanted(spec, e.graph):
                dd.add(e)
    for e in iter_cayley(spec):
        dd.add(e)
    log.info("corpus %s: %d graphs", spec, len(dd.entries))
    return tuple(sorted(dd.entries, key=lambda e: (e.graph.n, valency(e.graph), e.graph_id)))
