"""Immutable simple graphs with bitset adjacency and graph6 I/O.

Adjacency rows are Python ints used as bitsets: bit ``v`` of ``adj[u]`` is set
iff ``uv`` is an edge.  Every constructor returns a new value; nothing here
mutates a graph after it has been built.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class CapacityError(ValueError):
    """Raised when a graph would exceed ``MAX_VERTICES`` vertices."""


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _check_capacity(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds capacity {MAX_VERTICES}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash", "_packed")

    def __init__(self, n: int, adj: Sequence[int] | None = None, *, _trusted: bool = False) -> None:
        _check_capacity(n)
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if not _trusted:
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            full = (1 << n) - 1
            for u, row in enumerate(adj):
                if row < 0 or row & ~full:
                    raise ValueError(f"row {u} references a vertex >= {n}")
                if row >> u & 1:
                    raise ValueError(f"self-loop at vertex {u}")
                for v in iter_bits(row):
                    if not adj[v] >> u & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj: tuple[int, ...] = adj
        self._hash: int | None = None
        self._packed = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, _trusted=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()}, g6={encode_graph6(self).decode()!r})"

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def induced_edge_count(self, mask: int) -> int:
        """Number of edges with both ends in the vertex bitset ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.adj[v] | 1 << v) & mask == mask for v in vs)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            new = 0
            for v in iter_bits(row):
                new |= 1 << perm[v]
            rows[perm[u]] = new
        return Graph(self.n, rows, _trusted=True)

    def complement(self) -> Graph:
        full = self.vertex_mask()
        return Graph(self.n, [full & ~row & ~(1 << u) for u, row in enumerate(self.adj)], _trusted=True)


def complete(k: int) -> Graph:
    _check_capacity(k)
    full = (1 << k) - 1
    return Graph(k, [full ^ (1 << u) for u in range(k)], _trusted=True)


def empty(k: int) -> Graph:
    _check_capacity(k)
    return Graph(k, (0,) * k, _trusted=True)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    _check_capacity(n1 + g2.n)
    return Graph(n1 + g2.n, list(g1.adj) + [row << n1 for row in g2.adj], _trusted=True)


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    _check_capacity(n1 + n2)
    left = ((1 << n2) - 1) << n1
    right = (1 << n1) - 1
    rows = [row | left for row in g1.adj] + [row << n1 | right for row in g2.adj]
    return Graph(n1 + n2, rows, _trusted=True)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"u and v must differ, got {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"pair ({u}, {v}) out of range for n={g.n}")


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """Copy of ``g`` with ``uv`` present."""
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        return g
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows, _trusted=True)


def without_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if not g.has_edge(u, v):
        return g
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, rows, _trusted=True)


def non_edges(g: Graph) -> list[tuple[int, int]]:
    """Unordered non-adjacent pairs ``u < v`` in lexicographic order."""
    out = []
    full = g.vertex_mask()
    for u, row in enumerate(g.adj):
        missing = (full & ~row) >> (u + 1)
        for v in iter_bits(missing):
            out.append((u, u + 1 + v))
    return out


# graph6 ---------------------------------------------------------------------


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Parse one graph6 string.  A trailing newline and ``>>graph6<<`` header are tolerated."""
    if isinstance(data, str):
        data = data.encode("ascii")
    start = 0
    if data.startswith(b">>graph6<<"):
        start = 10
    end = len(data)
    while end > start and data[end - 1] in b"\r\n":
        end -= 1
    s = data[start:end]
    if not s:
        raise Graph6Error("empty graph6 string", start)
    for i, c in enumerate(s):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", start + i)
    if s[0] != 126:
        n = s[0] - 63
        pos = 1
    else:
        if len(s) >= 2 and s[1] == 126:
            raise Graph6Error("36-bit size header is not supported", start + 1)
        if len(s) < 4:
            raise Graph6Error("truncated size header", start + len(s))
        n = (s[1] - 63) << 12 | (s[2] - 63) << 6 | (s[3] - 63)
        if n <= 62:
            raise Graph6Error(f"long size header used for n={n}", start)
        if n > MAX_VERTICES:
            raise Graph6Error(f"{n} vertices exceeds capacity {MAX_VERTICES}", start)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {have}", start + pos + min(have, need))
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b in range(need):
        val = s[pos + b] - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", start + pos + b)
            k += 1
    return Graph(n, rows, _trusted=True)


def read_graph6_lines(text: bytes | str) -> list[Graph]:
    """Parse a .g6 document: one graph per non-empty line."""
    if isinstance(text, str):
        text = text.encode("ascii")
    graphs = []
    offset = 0
    for line in text.split(b"\n"):
        stripped = line.rstrip(b"\r")
        if stripped:
            try:
                graphs.append(decode_graph6(stripped))
            except Graph6Error as exc:
                raise Graph6Error(str(exc).rsplit(" (byte offset", 1)[0], offset + exc.offset) from None
        offset += len(line) + 1
    return graphs


def write_graph6_lines(graphs: Iterable[Graph]) -> bytes:
    return b"".join(encode_graph6(g) + b"\n" for g in graphs)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
