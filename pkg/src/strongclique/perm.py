"""Vertex permutations, automorphism groups and isomorphism testing.

Automorphisms are found by individualisation/refinement backtracking.  The
search walks a fixed base path ``b1, b2, ...`` (the vertices individualised
along the leftmost branch) and, working from the deepest level upwards,
finds coset representatives of each pointwise stabiliser in the next.  The
generators found this way generate the full automorphism group and the
group order is the product of the basic orbit lengths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import MAX_ORDER, Graph, degree_sequence, valency

CLOSURE_LIMIT = 10**6


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images do not form a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: Permutation) -> Permutation:
        """``(p * q)(v) == p(q(v))``."""
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def image_set(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.images[v] for v in vertices))

    def to_json(self) -> list[int]:
        return list(self.images)


def is_automorphism(g: Graph, p: Permutation | Sequence[int]) -> bool:
    images = p.images if isinstance(p, Permutation) else p
    if len(images) != g.n:
        return False
    return _is_isomorphism(g, g, images)


def _is_isomorphism(g1: Graph, g2: Graph, images: Sequence[int]) -> bool:
    masks2 = g2.masks
    for v in range(g1.n):
        m = 0
        for u in g1.adj[v]:
            m |= 1 << images[u]
        if m != masks2[images[v]]:
            return False
    return True


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def add_permutation(self, images: Sequence[int]) -> None:
        for v, w in enumerate(images):
            self.union(v, w)


def orbit(gens: GeneratorSet | Sequence[Permutation], v: int) -> tuple[int, ...]:
    """Smallest set containing ``v`` closed under the generators."""
    perms = gens.gens if isinstance(gens, GeneratorSet) else gens
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p.images[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return tuple(sorted(seen))


def set_orbit(
    gens: GeneratorSet | Sequence[Permutation], s: Iterable[int]
) -> list[tuple[int, ...]]:
    """Orbit of a vertex set under the induced action, sorted."""
    perms = gens.gens if isinstance(gens, GeneratorSet) else gens
    start = tuple(sorted(s))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for p in perms:
            y = p.image_set(x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a permutation group of the given degree.

    When produced by :func:`automorphisms`, ``base`` and ``orbit_lengths``
    describe the stabiliser chain and the group order is their product.
    """

    degree: int
    gens: tuple[Permutation, ...]
    base: tuple[int, ...] = ()
    orbit_lengths: tuple[int, ...] = field(default=())

    def order(self) -> int:
        if self.base:
            out = 1
            for k in self.orbit_lengths:
                out *= k
            return out
        return len(self.elements())

    def orbits(self) -> list[tuple[int, ...]]:
        uf = _UnionFind(self.degree)
        for p in self.gens:
            uf.add_permutation(p.images)
        groups: dict[int, list[int]] = {}
        for v in range(self.degree):
            groups.setdefault(uf.find(v), []).append(v)
        return sorted(tuple(c) for c in groups.values())

    def elements(self, limit: int = CLOSURE_LIMIT) -> list[Permutation]:
        """Materialise the whole group by closure (at most ``limit`` elements)."""
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        gens = [p.images for p in self.gens]
        while frontier:
            nxt = []
            for x in frontier:
                for gimg in gens:
                    y = tuple(gimg[i] for i in x)
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > limit:
                            raise CapExceeded(f"group has more than {limit} elements")
                        nxt.append(y)
            frontier = nxt
        return [Permutation(x) for x in sorted(seen)]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [p.to_json() for p in self.gens],
            "base": list(self.base),
            "orbit_lengths": list(self.orbit_lengths),
        }


# ---------------------------------------------------------------------------
# refinement


class _Coloring:
    """Ordered vertex partition as colour ranks plus the refinement trace."""

    __slots__ = ("colors", "ncolors", "trace")

    def __init__(self, colors: list[int], ncolors: int, trace: tuple):
        self.colors = colors
        self.ncolors = ncolors
        self.trace = trace

    def discrete(self) -> bool:
        return self.ncolors == len(self.colors)

    def target_cell(self) -> tuple[int, list[int]]:
        """Largest cell (lowest colour on ties) and its members in order."""
        sizes = Counter(self.colors)
        best = min(sizes, key=lambda c: (-sizes[c], c))
        return best, [v for v, c in enumerate(self.colors) if c == best]


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int], ncolors: int) -> _Coloring:
    # Colour refinement; new colours are ranks of (old colour, neighbour colour
    # counts), so the result commutes with isomorphisms.
    trace = []
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            cnt: dict[int, int] = {}
            for u in adj[v]:
                c = colors[u]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        tally = Counter(sigs)
        distinct = sorted(tally)
        trace.append(tuple((s, tally[s]) for s in distinct))
        if len(distinct) == ncolors:
            break
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]
        ncolors = len(distinct)
        if ncolors == n:
            break
    return _Coloring(colors, ncolors, tuple(trace))


def _individualize(adj, col: _Coloring, v: int) -> _Coloring:
    c = col.colors[v]
    colors = [x + 1 if x > c or (x == c and u != v) else x for u, x in enumerate(col.colors)]
    return _refine(adj, colors, col.ncolors + 1)


def _unit(g: Graph) -> _Coloring:
    return _refine(g.adj, [0] * g.n, 1 if g.n else 0)


def refined_partition(g: Graph, individualized: Sequence[int] = ()) -> list[tuple[int, ...]]:
    """Equitable ordered partition after individualising the given vertices."""
    col = _unit(g)
    for v in individualized:
        col = _individualize(g.adj, col, v)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col.colors):
        cells.setdefault(c, []).append(v)
    return [tuple(cells[c]) for c in sorted(cells)]


class _Search:
    """Backtracking search for isomorphisms g1 -> g2 along g1's fixed left path."""

    def __init__(self, g1: Graph, g2: Graph, root1: _Coloring):
        self.g1 = g1
        self.g2 = g2
        self.path = [root1]  # left colourings along the leftmost branch
        self.base: list[int] = []

    def left(self, depth: int) -> _Coloring:
        while len(self.path) <= depth:
            col = self.path[-1]
            _, cell = col.target_cell()
            v = cell[0]
            self.base.append(v)
            self.path.append(_individualize(self.g1.adj, col, v))
        return self.path[depth]

    def extend(self, depth: int, right: _Coloring) -> list[int] | None:
        left = self.left(depth)
        if left.trace != right.trace:
            return None
        if left.discrete():
            images = [0] * self.g1.n
            rpos = {c: w for w, c in enumerate(right.colors)}
            for v, c in enumerate(left.colors):
                images[v] = rpos[c]
            return images if _is_isomorphism(self.g1, self.g2, images) else None
        self.left(depth + 1)
        v = self.base[depth]
        c = left.colors[v]
        for w in [w for w, x in enumerate(right.colors) if x == c]:
            found = self.extend(depth + 1, _individualize(self.g2.adj, right, w))
            if found is not None:
                return found
        return None


def _check_cap(g: Graph) -> None:
    if g.n > MAX_ORDER:
        raise CapExceeded(f"order {g.n} exceeds {MAX_ORDER}")


def automorphisms(g: Graph, *, transitivity_only: bool = False) -> GeneratorSet:
    """Generators of Aut(g), with base and basic orbit lengths.

    With ``transitivity_only`` the search stops early: it returns as soon as
    the orbit of the first base point is known (the orbit lengths then hold
    just that orbit length).
    """
    _check_cap(g)
    n = g.n
    if n == 0:
        return GeneratorSet(0, (), (), ())
    root = _unit(g)
    search = _Search(g, g, root)
    depth = 0
    while not search.left(depth).discrete():
        depth += 1
    base = tuple(search.base)
    k = len(base)
    gens: list[tuple[int, ...]] = []
    lengths = [1] * k
    levels = [0] if transitivity_only else range(k - 1, -1, -1)
    for i in levels:
        col = search.path[i]
        b = base[i]
        uf = _UnionFind(n)
        for img in gens:
            uf.add_permutation(img)
        cell = [w for w, x in enumerate(col.colors) if x == col.colors[b]]
        for t in cell:
            if uf.find(t) == uf.find(b):
                continue
            found = search.extend(i + 1, _individualize(g.adj, col, t))
            if found is not None:
                gens.append(tuple(found))
                uf.add_permutation(found)
        lengths[i] = sum(1 for w in range(n) if uf.find(w) == uf.find(b))
    perms = tuple(Permutation(img) for img in gens)
    if transitivity_only:
        return GeneratorSet(n, perms, base[:1], (lengths[0],))
    return GeneratorSet(n, perms, base, tuple(lengths))


def is_vertex_transitive(g: Graph) -> bool:
    if g.n <= 1:
        return True
    if valency(g) is None:
        return False
    gs = automorphisms(g, transitivity_only=True)
    return gs.orbit_lengths[0] == g.n


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def find_isomorphism(g1: Graph, g2: Graph) -> Permutation | None:
    """An edge-preserving bijection ``V(g1) -> V(g2)``, or ``None``."""
    _check_cap(g1)
    _check_cap(g2)
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if degree_sequence(g1) != degree_sequence(g2):
        return None
    if g1.n == 0:
        return Permutation(())
    r1, r2 = _unit(g1), _unit(g2)
    found = _Search(g1, g2, r1).extend(0, r2)
    return None if found is None else Permutation(tuple(found))


def transitive_invariant(g: Graph) -> tuple:
    """Isomorphism invariant valid for vertex-transitive graphs only.

    The trace of refining after individualising vertex 0 does not depend on
    the choice of vertex when all vertices are equivalent.
    """
    if g.n == 0:
        return ()
    return _individualize(g.adj, _unit(g), 0).trace
