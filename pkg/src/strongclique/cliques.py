"""Clique and independent-set kernels on bitset adjacency."""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, bits, complement
from .perm import CapExceeded

CHROMATIC_CAP = 64


def _complement_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(g.masks)]


def iter_maximal_cliques(masks: Sequence[int]) -> Iterator[int]:
    """Yield maximal cliques of the graph given by ``masks`` as bitmasks.

    Bron–Kerbosch with pivoting: the pivot maximises ``|P ∩ N(u)|`` over
    ``u ∈ P ∪ X``, lowest index on ties.
    """
    n = len(masks)
    if n == 0:
        return
    stack = [(0, (1 << n) - 1, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        best, pivot = -1, -1
        px = p | x
        while px:
            low = px & -px
            u = low.bit_length() - 1
            c = (p & masks[u]).bit_count()
            if c > best:
                best, pivot = c, u
            px ^= low
        cand = p & ~masks[pivot]
        frames = []
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            mv = masks[v]
            frames.append((r | low, p & mv, x & mv))
            p &= ~low
            x |= low
            cand ^= low
        # reversed so that lower vertices are explored first
        stack.extend(reversed(frames))


def _sorted_sets(masks_out: list[int]) -> list[tuple[int, ...]]:
    return sorted(tuple(bits(m)) for m in masks_out)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each a sorted tuple, in lexicographic order."""
    return _sorted_sets(list(iter_maximal_cliques(g.masks)))


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    return _sorted_sets(list(iter_maximal_cliques(_complement_masks(g))))


def _max_clique(masks: Sequence[int]) -> int:
    n = len(masks)
    if n == 0:
        return 0
    best = 0
    stack = [(0, (1 << n) - 1)]
    while stack:
        size, p = stack.pop()
        if not p:
            best = max(best, size)
            continue
        if size + p.bit_count() <= best:
            continue
        while p:
            if size + p.bit_count() <= best:
                break
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            stack.append((size + 1, p & masks[v]))
    return best


def clique_number(g: Graph) -> int:
    return _max_clique(g.masks)


def independence_number(g: Graph) -> int:
    return _max_clique(_complement_masks(g))


def clique_graph(g: Graph, cliques: Sequence[Sequence[int]] | None = None) -> Graph:
    """Graph of maximal cliques, adjacent when they intersect."""
    if cliques is None:
        cliques = maximal_cliques(g)
    cm = [sum(1 << v for v in c) for c in cliques]
    k = len(cm)
    adj = [[j for j in range(k) if j != i and cm[i] & cm[j]] for i in range(k)]
    return Graph(k, adj)


def _colorable(masks: Sequence[int], k: int) -> list[int] | None:
    """Exact k-colouring by DSATUR-ordered backtracking, or ``None``."""
    n = len(masks)
    color = [-1] * n
    # forbidden[v]: bitmask of colours used by coloured neighbours
    forbidden = [0] * n
    degree = [m.bit_count() for m in masks]

    def pick() -> int:
        best, bv = None, -1
        for v in range(n):
            if color[v] < 0:
                key = (forbidden[v].bit_count(), degree[v], -v)
                if best is None or key > best:
                    best, bv = key, v
        return bv

    def solve(ncolored: int, used: int) -> bool:
        if ncolored == n:
            return True
        v = pick()
        limit = min(k, used + 1)
        for c in range(limit):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            bit = 1 << c
            nb = masks[v]
            dead = False
            while nb:
                low = nb & -nb
                u = low.bit_length() - 1
                nb ^= low
                if color[u] < 0 and not forbidden[u] & bit:
                    forbidden[u] |= bit
                    touched.append(u)
                    if forbidden[u].bit_count() == k:
                        dead = True
            if not dead and solve(ncolored + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~bit
            color[v] = -1
        return False

    return list(color) if solve(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterative deepening from the clique bound."""
    if g.n > CHROMATIC_CAP:
        raise CapExceeded(f"chromatic number limited to {CHROMATIC_CAP} vertices")
    if g.n == 0:
        return 0
    k = max(1, clique_number(g))
    while _colorable(g.masks, k) is None:
        k += 1
    return k


def coloring(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with at most ``k`` colours, if one exists."""
    if g.n > CHROMATIC_CAP:
        raise CapExceeded(f"chromatic number limited to {CHROMATIC_CAP} vertices")
    return _colorable(g.masks, k)


def clique_cover_number(g: Graph) -> int:
    """Fewest cliques partitioning V(g), i.e. the chromatic number of the complement."""
    return chromatic_number(complement(g))
