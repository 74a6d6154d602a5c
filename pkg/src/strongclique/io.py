"""graph6 and DIMACS edge-list encodings."""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph, GraphError

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]


def to_graph6(g: Graph) -> str:
    out = _encode_n(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if text.startswith(":") or text.startswith("&"):
        raise GraphError("sparse6/digraph6 input is not graph6")
    data = [ord(c) - 63 for c in text]
    if not data or any(not 0 <= b < 64 for b in data):
        raise GraphError("invalid graph6 character")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        if len(data) < 8:
            raise GraphError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p edge {g.n} {g.num_edges}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(lines: str | Iterable[str]) -> Graph:
    if isinstance(lines, str):
        lines = lines.splitlines()
    n = None
    edges = []
    for raw in lines:
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) < 4 or tok[1] not in ("edge", "col"):
                raise GraphError(f"bad DIMACS problem line: {line!r}")
            n = int(tok[2])
        elif tok[0] == "e":
            if n is None:
                raise GraphError("DIMACS edge before problem line")
            u, v = int(tok[1]) - 1, int(tok[2]) - 1
            if u != v:
                edges.append((u, v))
        else:
            raise GraphError(f"unknown DIMACS line: {line!r}")
    if n is None:
        raise GraphError("DIMACS input has no problem line")
    return Graph.from_edges(n, edges)


def read_graph(fh: TextIO) -> Graph:
    """Read a graph file, sniffing graph6 vs DIMACS from the first real line."""
    text = fh.read()
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        if s[0] in "cpe" and (len(s) == 1 or s[1] == " "):
            return from_dimacs(text)
        return from_graph6(s)
    raise GraphError("empty graph file")
