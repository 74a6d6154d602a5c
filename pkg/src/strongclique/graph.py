"""Immutable simple undirected graphs and structural operations.

Vertices are always ``0..n-1``.  Every graph keeps its adjacency both as sorted
neighbour tuples and as Python-int bitsets (bit ``u`` of ``masks[v]`` set iff
``u ~ v``); the search kernels work on the bitsets.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 512


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("n", "adj", "masks", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or n > MAX_ORDER:
            raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
        if len(adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        lists = []
        for v, nbrs in enumerate(adj):
            row = tuple(sorted(set(nbrs)))
            if row and (row[0] < 0 or row[-1] >= n):
                raise GraphError(f"neighbour of {v} out of range")
            if v in row:
                raise GraphError(f"loop at vertex {v}")
            lists.append(row)
        masks = tuple(to_mask(row) for row in lists)
        for v, row in enumerate(lists):
            for u in row:
                if not masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(lists))
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def _from_masks(cls, masks: Sequence[int]) -> Graph:
        return cls(len(masks), [bits(m) for m in masks])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def vertex_set(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """Validate ``vertices`` and return them as a strictly increasing tuple."""
        vs = list(vertices)
        out = tuple(sorted(set(vs)))
        if len(out) != len(vs):
            raise GraphError(f"repeated vertex in {vs}")
        for v in out:
            self.check_vertex(v)
        return out

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = to_mask(vs)
        return all((self.masks[v] | (1 << v)) & m == m for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = to_mask(vs)
        return all(not self.masks[v] & m for v in vs)


def empty_graph(n: int) -> Graph:
    return Graph(n, [()] * n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s``, vertex ``s[i]`` becoming ``i``.  Order of ``s`` is kept."""
    s = list(s)
    for v in s:
        g.check_vertex(v)
    if len(set(s)) != len(s):
        raise GraphError("duplicate vertex in induced subgraph")
    pos = {v: i for i, v in enumerate(s)}
    return Graph(len(s), [[pos[u] for u in g.adj[v] if u in pos] for v in s])


def local_graph(g: Graph, v: int) -> Graph:
    g.check_vertex(v)
    if not g.adj[v]:
        raise GraphError(f"vertex {v} is isolated")
    return induced_subgraph(g, g.adj[v])


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex ``(u, x)`` is encoded as ``u * g2.n + x``."""
    m = g2.n
    edges = []
    for u in range(g1.n):
        for x, y in g2.edges():
            edges.append((u * m + x, u * m + y))
    for u, v in g1.edges():
        for x in range(m):
            edges.append((u * m + x, v * m + x))
    return Graph.from_edges(g1.n * m, edges)


def lexicographic_product(g1: Graph, g2: Graph) -> Graph:
    """``g1[g2]``; same vertex encoding as :func:`cartesian_product`."""
    m = g2.n
    edges = []
    for u in range(g1.n):
        for x, y in g2.edges():
            edges.append((u * m + x, u * m + y))
    for u, v in g1.edges():
        for x in range(m):
            for y in range(m):
                edges.append((u * m + x, v * m + y))
    return Graph.from_edges(g1.n * m, edges)


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(es):
        incident[u].append(i)
        incident[v].append(i)
    edges = []
    for inc in incident:
        edges.extend(combinations(inc, 2))
    return Graph.from_edges(len(es), edges)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[list[int]] = []
    offset = 0
    for h in graphs:
        adj.extend([u + offset for u in row] for row in h.adj)
        offset += h.n
    return Graph(offset, adj)


def twins(g: Graph, closed: bool = False) -> list[tuple[int, int]]:
    """Pairs ``u < v`` with equal open (or closed) neighbourhoods."""
    groups: dict[int, list[int]] = {}
    for v, m in enumerate(g.masks):
        key = m | (1 << v) if closed else m
        groups.setdefault(key, []).append(v)
    pairs = []
    for members in groups.values():
        pairs.extend(combinations(members, 2))
    return sorted(pairs)


def is_reducible(g: Graph) -> bool:
    return bool(twins(g))


def twin_quotient(g: Graph, closed: bool = False) -> tuple[Graph, list[tuple[int, ...]]]:
    """Collapse twin classes to single vertices.

    Returns the quotient graph and the classes (each sorted, ordered by their
    smallest member); quotient vertex ``i`` stands for ``classes[i]``.
    """
    groups: dict[int, list[int]] = {}
    for v, m in enumerate(g.masks):
        groups.setdefault(m | (1 << v) if closed else m, []).append(v)
    classes = sorted(tuple(c) for c in groups.values())
    rep = [c[0] for c in classes]
    return induced_subgraph(g, rep), classes


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def valency(g: Graph) -> int | None:
    """Common degree of a regular graph, or ``None`` when irregular."""
    degs = {len(row) for row in g.adj}
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((len(row) for row in g.adj), reverse=True))


def relabel(g: Graph, images: Sequence[int]) -> Graph:
    """Graph in which ``images[v]`` plays the role of ``v``."""
    return Graph.from_edges(g.n, [(images[u], images[v]) for u, v in g.edges()])
