"""Strong cliques, strong independent sets, CIS and localizable graphs.

Most predicates come in two independent flavours so that they can be
cross-checked: a direct one (enumerate every maximal independent set) and a
structural one (domination search, or a counting criterion that holds for
vertex-transitive graphs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cliques import (
    _complement_masks,
    clique_graph,
    independence_number,
    iter_maximal_cliques,
    maximal_cliques,
    maximal_independent_sets,
)
from .graph import Graph, bits, complement, is_reducible, to_mask
from .perm import is_vertex_transitive


class PreconditionError(ValueError):
    """Input outside the domain on which an operation is defined."""


class MethodDisagreement(AssertionError):
    """Two independent methods returned different answers."""


@dataclass(frozen=True)
class StrongVerdict:
    is_strong: bool
    # when not strong: a maximal independent set missing the clique, or an
    # independent set disjoint from it that dominates it
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.is_strong


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``b`` has a neighbour in ``a``."""
    am = to_mask(g.vertex_set(a))
    return all(g.masks[v] & am for v in g.vertex_set(b))


def _require_clique(g: Graph, c: Sequence[int]) -> tuple[int, ...]:
    c = g.vertex_set(c)
    if not g.is_clique(c):
        raise PreconditionError(f"{c} is not a clique")
    return c


def strong_by_enumeration(
    g: Graph, c: Sequence[int], mis: Sequence[Sequence[int]] | None = None
) -> StrongVerdict:
    """Scan the maximal independent sets (lexicographic order) for one missing ``c``."""
    c = _require_clique(g, c)
    if mis is None:
        mis = maximal_independent_sets(g)
    cm = to_mask(c)
    for i in mis:
        if not to_mask(i) & cm:
            return StrongVerdict(False, tuple(i))
    return StrongVerdict(True)


def dominating_independent_set(g: Graph, c: Sequence[int]) -> tuple[int, ...] | None:
    """An independent set disjoint from clique ``c`` that dominates it, or None.

    Only vertices of ``N(v) \\ c`` for ``v`` in ``c`` are ever needed: for the
    lowest undominated clique vertex, one of its outside neighbours is tried.
    """
    c = g.vertex_set(c)
    masks = g.masks
    cm = to_mask(c)

    def search(chosen: int, blocked: int, dominated: int) -> int | None:
        rest = cm & ~dominated
        if not rest:
            return chosen
        v = (rest & -rest).bit_length() - 1
        cand = masks[v] & ~cm & ~blocked
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            found = search(chosen | low, blocked | low | masks[u], dominated | (masks[u] & cm))
            if found is not None:
                return found
        return None

    found = search(0, 0, 0)
    if found is None:
        return None
    # drop redundant members, highest first
    members = bits(found)
    for u in reversed(members[:]):
        rest = [w for w in members if w != u]
        rm = to_mask(rest)
        if all(masks[v] & rm for v in c):
            members = rest
    return tuple(members)


def strong_by_domination(g: Graph, c: Sequence[int]) -> StrongVerdict:
    c = _require_clique(g, c)
    dom = dominating_independent_set(g, c)
    if dom is None:
        return StrongVerdict(True)
    return StrongVerdict(False, dom)


def is_strong_clique(
    g: Graph,
    c: Sequence[int],
    method: str = "both",
    mis: Sequence[Sequence[int]] | None = None,
) -> StrongVerdict:
    """Whether ``c`` meets every maximal independent set of ``g``.

    ``method`` is ``"enumerate"``, ``"dominate"`` or ``"both"``; with
    ``"both"`` a disagreement raises :class:`MethodDisagreement` and the
    witness reported is the enumeration one (a maximal independent set).
    """
    if method == "enumerate":
        return strong_by_enumeration(g, c, mis)
    if method == "dominate":
        return strong_by_domination(g, c)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = strong_by_enumeration(g, c, mis)
    b = strong_by_domination(g, c)
    if a.is_strong != b.is_strong:
        raise MethodDisagreement(f"strong test disagrees on {tuple(c)}: {a} vs {b}")
    return a


def is_strong_independent_set(g: Graph, i: Sequence[int], method: str = "both") -> StrongVerdict:
    i = g.vertex_set(i)
    if not g.is_independent(i):
        raise PreconditionError(f"{i} is not an independent set")
    return is_strong_clique(complement(g), i, method)


def vt_strong_criterion(
    g: Graph, c: Sequence[int], mis: Sequence[Sequence[int]] | None = None
) -> bool:
    """``|c| * |I| == |V|`` for every maximal independent set ``I``.

    Decides strongness only when ``g`` is vertex-transitive; not checked here.
    """
    c = _require_clique(g, c)
    if mis is None:
        mis = maximal_independent_sets(g)
    k = len(c)
    return all(k * len(i) == g.n for i in mis)


def has_strong_clique(g: Graph, vertex_transitive: bool | None = None) -> tuple[int, ...] | None:
    """Lexicographically first strong clique, or None.

    For vertex-transitive graphs only maximum cliques are examined, since a
    strong clique there is always maximum.
    """
    if g.n == 0:
        return None
    if vertex_transitive is None:
        vertex_transitive = is_vertex_transitive(g)
    cands = maximal_cliques(g)
    if vertex_transitive:
        w = max(len(c) for c in cands)
        cands = [c for c in cands if len(c) == w]
    for c in cands:
        if dominating_independent_set(g, c) is None:
            return c
    return None


def has_strong_independent_set(g: Graph, vertex_transitive: bool | None = None) -> tuple[int, ...] | None:
    return has_strong_clique(complement(g), vertex_transitive)


def strong_cliques(g: Graph, cliques: Sequence[Sequence[int]] | None = None) -> list[tuple[int, ...]]:
    """All strong cliques.  Non-maximal cliques are never strong."""
    if cliques is None:
        cliques = maximal_cliques(g)
    return [tuple(c) for c in cliques if dominating_independent_set(g, c) is None]


def _uniform(sizes: Iterable[int]) -> bool:
    first = None
    for s in sizes:
        if first is None:
            first = s
        elif s != first:
            return False
    return True


def is_well_covered(g: Graph) -> bool:
    return _uniform(m.bit_count() for m in iter_maximal_cliques(_complement_masks(g)))


def is_co_well_covered(g: Graph) -> bool:
    return _uniform(m.bit_count() for m in iter_maximal_cliques(g.masks))


def cis_by_enumeration(g: Graph) -> bool:
    cliques = list(iter_maximal_cliques(g.masks))
    for i in iter_maximal_cliques(_complement_masks(g)):
        for c in cliques:
            if not c & i:
                return False
    return True


def cis_by_strong_pair(g: Graph) -> bool:
    """Strong clique plus strong independent set; valid for vertex-transitive g."""
    return has_strong_clique(g, True) is not None and has_strong_independent_set(g, True) is not None


def is_cis(g: Graph, vertex_transitive: bool | None = None) -> bool:
    """Every maximal clique is strong.  On vertex-transitive input both methods run."""
    a = cis_by_enumeration(g)
    if vertex_transitive is None:
        vertex_transitive = is_vertex_transitive(g)
    if vertex_transitive and g.n:
        b = cis_by_strong_pair(g)
        if a != b:
            raise MethodDisagreement(f"CIS methods disagree: enumeration={a}, strong pair={b}")
    return a


def exact_cover(universe: int, sets: Sequence[int]) -> list[int] | None:
    """Indices of pairwise disjoint ``sets`` (bitmasks) covering ``universe``.

    Always covers the lowest uncovered element next; candidate sets are
    tried in the given order.
    """
    by_elem: dict[int, list[int]] = {}
    for idx, s in enumerate(sets):
        for v in bits(s):
            by_elem.setdefault(v, []).append(idx)

    chosen: list[int] = []

    def solve(uncovered: int) -> bool:
        if not uncovered:
            return True
        v = (uncovered & -uncovered).bit_length() - 1
        for idx in by_elem.get(v, ()):
            s = sets[idx]
            if s & ~uncovered:
                continue
            chosen.append(idx)
            if solve(uncovered & ~s):
                return True
            chosen.pop()
        return False

    return list(chosen) if solve(universe) else None


def localizable_partition(g: Graph, strong: Sequence[Sequence[int]] | None = None) -> list[tuple[int, ...]] | None:
    """Partition of V(g) into strong cliques, or None."""
    if g.n == 0:
        return []
    if strong is None:
        strong = strong_cliques(g)
    masks = [to_mask(c) for c in strong]
    picked = exact_cover((1 << g.n) - 1, masks)
    if picked is None:
        return None
    return sorted(tuple(strong[i]) for i in picked)


def localizable_by_clique_graph(g: Graph) -> bool:
    """α of the maximal-clique graph equals α(g); requires a vertex-transitive CIS graph."""
    if not is_vertex_transitive(g) or not cis_by_enumeration(g):
        raise PreconditionError("clique-graph criterion needs a vertex-transitive CIS graph")
    return independence_number(clique_graph(g)) == independence_number(g)


def is_localizable(g: Graph, cross_check: bool = False) -> list[tuple[int, ...]] | None:
    """Partition into strong cliques if ``g`` is localizable, else None.

    With ``cross_check`` the clique-graph criterion is also evaluated when it
    applies (vertex-transitive CIS graphs) and must agree.
    """
    part = localizable_partition(g)
    if cross_check and g.n and is_vertex_transitive(g) and cis_by_enumeration(g):
        if localizable_by_clique_graph(g) != (part is not None):
            raise MethodDisagreement("localizability methods disagree")
    return part


def irreducible_intersection_check(g: Graph) -> bool:
    """Strong cliques meet every other maximal clique in fewer than ``|C| - 1`` vertices.

    Requires ``g`` vertex-transitive and irreducible (no open twins).
    """
    if not is_vertex_transitive(g):
        raise PreconditionError("graph is not vertex-transitive")
    if is_reducible(g):
        raise PreconditionError("graph is reducible")
    cliques = maximal_cliques(g)
    strong = set(strong_cliques(g, cliques))
    cm = {c: to_mask(c) for c in cliques}
    for c in strong:
        for d in cliques:
            if d != c and (cm[c] & cm[d]).bit_count() >= len(c) - 1:
                return False
    return True


def half_order_clique_check(g: Graph) -> bool:
    """A vertex-transitive graph with a maximal clique of half its order
    splits into two strong cliques."""
    if g.n == 0 or g.n % 2:
        raise PreconditionError("order must be positive and even")
    if not any(len(c) * 2 == g.n for c in maximal_cliques(g)):
        raise PreconditionError("no maximal clique of half the order")
    if not is_vertex_transitive(g):
        raise PreconditionError("graph is not vertex-transitive")
    part = localizable_partition(g)
    return part is not None and len(part) == 2

