"""Constructors for the named graph families.

Groups are small and concrete: cyclic groups, direct products of cyclic
groups (elements encoded mixed-radix, first factor most significant), and
dihedral / symmetric groups realised as permutation groups whose elements
are indexed by the lexicographic order of their image tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .graph import (
    Graph,
    GraphError,
    cartesian_product,
    complement,
    empty_graph,
    line_graph,
)

MAX_GROUP_ORDER = 10**4


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """A finite group: ``kind`` is ``cyclic``, ``product``, ``dihedral`` or ``symmetric``.

    ``params`` holds the cyclic orders for ``cyclic``/``product`` and the
    number of points for ``dihedral`` (order ``2n``) and ``symmetric``.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.kind in ("cyclic", "product"):
            if not self.params or any(p < 1 for p in self.params):
                raise GroupError(f"bad cyclic orders {self.params}")
            if self.kind == "cyclic" and len(self.params) != 1:
                raise GroupError("cyclic group takes a single order")
        elif self.kind in ("dihedral", "symmetric"):
            if len(self.params) != 1 or self.params[0] < 1:
                raise GroupError(f"bad degree {self.params}")
            if self.kind == "dihedral" and self.params[0] < 3:
                raise GroupError("dihedral group needs at least 3 points")
        else:
            raise GroupError(f"unknown group kind {self.kind!r}")
        if self.order > MAX_GROUP_ORDER:
            raise GroupError(f"group order {self.order} exceeds {MAX_GROUP_ORDER}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls("cyclic", (n,))

    @classmethod
    def product(cls, *orders: int) -> GroupSpec:
        return cls("product", tuple(orders))

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        return cls("dihedral", (n,))

    @classmethod
    def symmetric(cls, n: int) -> GroupSpec:
        return cls("symmetric", (n,))

    @property
    def abelian_kind(self) -> bool:
        return self.kind in ("cyclic", "product")

    @property
    def order(self) -> int:
        if self.abelian_kind:
            out = 1
            for p in self.params:
                out *= p
            return out
        n = self.params[0]
        if self.kind == "dihedral":
            return 2 * n
        out = 1
        for k in range(2, n + 1):
            out *= k
        return out

    def __str__(self):
        if self.kind == "cyclic":
            return f"Z{self.params[0]}"
        if self.kind == "product":
            return "x".join(f"Z{p}" for p in self.params)
        return f"{'D' if self.kind == 'dihedral' else 'S'}{self.params[0]}"

    @cached_property
    def _perms(self) -> list[tuple[int, ...]]:
        n = self.params[0]
        if self.kind == "symmetric":
            return list(permutations(range(n)))
        rots = [tuple((i + k) % n for i in range(n)) for k in range(n)]
        refl = [tuple((k - i) % n for i in range(n)) for k in range(n)]
        return sorted(rots + refl)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {p: i for i, p in enumerate(self._perms)}

    @property
    def identity(self) -> int:
        if self.abelian_kind:
            return 0
        return self._index[tuple(range(self.params[0]))]

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for p in reversed(self.params):
            out.append(a % p)
            a //= p
        return tuple(reversed(out))

    def encode(self, element) -> int:
        """Index of an element given as an int, a coordinate tuple, or a permutation."""
        if self.abelian_kind:
            if isinstance(element, int):
                coords = (element,) if len(self.params) == 1 else None
                if coords is None:
                    if not 0 <= element < self.order:
                        raise GroupError(f"element index {element} out of range")
                    return element
            else:
                coords = tuple(element)
            if len(coords) != len(self.params):
                raise GroupError(f"element {element!r} has wrong arity")
            a = 0
            for x, p in zip(coords, self.params):
                a = a * p + x % p
            return a
        if isinstance(element, int):
            if not 0 <= element < self.order:
                raise GroupError(f"element index {element} out of range")
            return element
        try:
            return self._index[tuple(element)]
        except KeyError:
            raise GroupError(f"{element!r} is not an element of {self}") from None

    def mul(self, a: int, b: int) -> int:
        if self.abelian_kind:
            da, db = self.digits(a), self.digits(b)
            return self.encode(tuple(x + y for x, y in zip(da, db)))
        pa, pb = self._perms[a], self._perms[b]
        # permutations act on the left: (ab)(i) = a(b(i))
        return self._index[tuple(pa[i] for i in pb)]

    def inv(self, a: int) -> int:
        if self.abelian_kind:
            return self.encode(tuple(-x for x in self.digits(a)))
        p = self._perms[a]
        q = [0] * len(p)
        for i, x in enumerate(p):
            q[x] = i
        return self._index[tuple(q)]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed, identity-free set of group element indices."""

    group: GroupSpec
    elements: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        elems = frozenset(self.group.encode(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if self.group.identity in elems:
            raise GroupError("connection set contains the identity")
        for a in elems:
            if self.group.inv(a) not in elems:
                raise GroupError(f"connection set not inverse-closed at element {a}")

    @classmethod
    def closure(cls, group: GroupSpec, generators: Iterable) -> ConnectionSet:
        """Connection set made of the given elements and their inverses."""
        elems = set()
        for e in generators:
            a = group.encode(e)
            elems.add(a)
            elems.add(group.inv(a))
        return cls(group, frozenset(elems))

    def sorted(self) -> list[int]:
        return sorted(self.elements)


def cayley(group: GroupSpec, s: ConnectionSet | Iterable) -> Graph:
    """Cay(G, S): ``x ~ y`` iff ``x^-1 y`` lies in ``S``."""
    if not isinstance(s, ConnectionSet):
        s = ConnectionSet(group, frozenset(s))
    elif s.group != group:
        raise GroupError("connection set belongs to a different group")
    conn = s.sorted()
    adj = [[group.mul(x, a) for a in conn] for x in group.elements()]
    return Graph(group.order, adj)


def circulant(n: int, jumps: Iterable[int]) -> Graph:
    """Cay(Z_n, ±jumps)."""
    grp = GroupSpec.cyclic(n)
    return cayley(grp, ConnectionSet.closure(grp, jumps))


# ---------------------------------------------------------------------------
# standard small graphs

# Five-vertex graphs with exactly one triangle and no universal vertex.  Only
# L1 is pinned down by name; the rest are fixed by structure: L2 and L3 have
# every edge meeting the triangle (one and two pendant edges), L4 is the local
# graph of K3 x K4, L5 carries a pendant path of length two, L6 is the local
# graph of the complement of C8.
LOCAL_GRAPHS: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((0, 1), (0, 2), (1, 2)),
    2: ((0, 1), (0, 2), (1, 2), (0, 3)),
    3: ((0, 1), (0, 2), (1, 2), (0, 3), (1, 4)),
    4: ((0, 1), (0, 2), (1, 2), (3, 4)),
    5: ((0, 1), (0, 2), (1, 2), (0, 3), (3, 4)),
    6: ((0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4)),
}


def complete(n: int) -> Graph:
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int | None = None) -> Graph:
    n = m if n is None else n
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def local_graph_L(i: int) -> Graph:
    if i not in LOCAL_GRAPHS:
        raise GraphError(f"no local graph L{i}")
    return Graph.from_edges(5, LOCAL_GRAPHS[i])


def petersen() -> Graph:
    return gen_johnson(5, 2, 0)


def standard(name: str, *params: int) -> Graph:
    """Named small graphs: ``K n``, ``C n``, ``P n``, ``Kmm m``, ``Kmn m n``,
    ``E n`` (n isolated vertices), ``L i``, ``petersen``."""
    builders = {
        "K": complete,
        "C": cycle,
        "P": path,
        "Kmm": complete_bipartite,
        "Kmn": complete_bipartite,
        "E": empty_graph,
        "L": local_graph_L,
        "petersen": petersen,
    }
    try:
        build = builders[name]
    except KeyError:
        raise GraphError(f"unknown standard graph {name!r}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {params}") from exc


# ---------------------------------------------------------------------------
# families from the classifications


def h_graph(n: int) -> Graph:
    """H_n: ``n`` disjoint K4's ``{x_i, y_i, z_i, w_i}`` linked in a cycle.

    Vertex ``4(i-1) + j`` is the ``j``-th of ``x_i, y_i, z_i, w_i``.  Links are
    ``z_i ~ x_{i+1}`` and ``w_i ~ y_{i+1}`` for ``i < n`` plus ``x_1 ~ z_n``
    and ``y_1 ~ w_n``.
    """
    if n < 2:
        raise GraphError("H_n needs n >= 2")
    def x(i): return 4 * (i - 1)
    def y(i): return 4 * (i - 1) + 1
    def z(i): return 4 * (i - 1) + 2
    def w(i): return 4 * (i - 1) + 3
    edges = []
    for i in range(1, n + 1):
        edges.extend(combinations((x(i), y(i), z(i), w(i)), 2))
    for i in range(1, n):
        edges.append((z(i), x(i + 1)))
        edges.append((w(i), y(i + 1)))
    edges.append((x(1), z(n)))
    edges.append((y(1), w(n)))
    return Graph.from_edges(4 * n, edges)


def johnson_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """Vertex labels of J(n, k, i): k-subsets of {1..n} in lexicographic order."""
    return list(combinations(range(1, n + 1), k))


def gen_johnson(n: int, k: int, i: int) -> Graph:
    """J(n, k, i): k-subsets of {1..n}, adjacent when they share exactly i points."""
    if not n > k > i >= 0:
        raise GraphError(f"need n > k > i >= 0, got ({n}, {k}, {i})")
    subs = johnson_subsets(n, k)
    masks = [sum(1 << (x - 1) for x in s) for s in subs]
    edges = [
        (a, b)
        for a, b in combinations(range(len(subs)), 2)
        if (masks[a] & masks[b]).bit_count() == i
    ]
    return Graph.from_edges(len(subs), edges)


def family_L1(name: str, n: int) -> Graph:
    """The four 5-valent families with local graph K3 + 2K1 (``A``..``D``).

    A: Cay(Z_4n, {±1, ±n, 2n}); B: Cay(Z_2n x Z_2, {(±1,0), (n,0), (0,1), (n,1)});
    C: Cay(Z_n x Z_4, {(±1,0), (0,1), (0,2), (0,3)}); D: H_n x K2 (cartesian).
    """
    if n < 4:
        raise GraphError("L1 families are defined for n >= 4")
    if name == "A":
        return circulant(4 * n, [1, n, 2 * n])
    if name == "B":
        grp = GroupSpec.product(2 * n, 2)
        return cayley(grp, ConnectionSet.closure(grp, [(1, 0), (n, 0), (0, 1), (n, 1)]))
    if name == "C":
        grp = GroupSpec.product(n, 4)
        return cayley(grp, ConnectionSet.closure(grp, [(1, 0), (0, 1), (0, 2), (0, 3)]))
    if name == "D":
        return cartesian_product(h_graph(n), complete(2))
    raise GraphError(f"unknown L1 family {name!r}")


def c3_cn(n: int) -> Graph:
    """C3 x Cn realised as Cay(Z_n x Z_3, {(±1,0), (0,±1)})."""
    grp = GroupSpec.product(n, 3)
    return cayley(grp, ConnectionSet.closure(grp, [(1, 0), (0, 1)]))


def named(family: str, params: Sequence[int] = ()) -> Graph:
    """Dispatch used by the CLI ``gen`` command."""
    fam = family
    p = [int(x) for x in params]
    if fam in ("K", "C", "P", "Kmm", "Kmn", "E", "L", "petersen"):
        return standard(fam, *p)
    if fam == "H":
        return h_graph(*p)
    if fam == "J":
        return gen_johnson(*p)
    if fam in ("L1A", "L1B", "L1C", "L1D"):
        return family_L1(fam[-1], *p)
    if fam == "circulant":
        return circulant(p[0], p[1:])
    if fam == "line-K":
        return line_graph(complete(*p))
    if fam == "line-Kmm":
        return line_graph(complete_bipartite(*p))
    if fam == "coC":
        return complement(cycle(*p))
    raise GraphError(f"unknown family {family!r}")
