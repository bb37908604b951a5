"""Labeled simple graphs: representation, generators, triangles, graph6 I/O.

Graphs are immutable once built.  Vertices are the dense integers 0..n-1 and
adjacency is kept as one bitmask per vertex, which makes neighbourhood
intersections (the workhorse of every triangle routine and solver in this
package) single integer AND operations.

Two fixed orderings matter everywhere and must not be confused:

* the *canonical edge index* ranks the pair (u, v), u < v, lexicographically
  among all n(n-1)/2 pairs ((0,1), (0,2), ..., (0,n-1), (1,2), ...); every
  serialized edge certificate uses this ranking;
* the *graph6 bit order* walks the upper triangle column by column
  ((0,1), (0,2), (1,2), (0,3), ...), as the published format prescribes.

``gnp`` draws one uniform variate per pair, in canonical pair order, from
``random.Random`` (the Mersenne Twister MT19937).  CPython guarantees that
``random.random()`` sequences are reproducible across platforms and versions
for a fixed seed, which is exactly the determinism contract we need: equal
(n, p, seed) always yields the identical edge set.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "ParameterError",
    "PreconditionError",
    "Graph6ParseError",
    "edge_index",
    "edge_at",
    "gnp",
    "complete_graph",
    "empty_graph",
    "complete_bipartite",
    "cycle_graph",
    "path_graph",
    "disjoint_union",
    "join",
    "standard_graph",
    "triangles",
    "triangle_count",
    "is_triangular",
    "to_graph6",
    "from_graph6",
    "read_graph6",
    "write_graph6",
]


class ParameterError(ValueError):
    """A numeric parameter lies outside its documented domain."""


class PreconditionError(ValueError):
    """A structural precondition fails (e.g. the input graph has a triangle)."""


class Graph6ParseError(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask adjacency.

    ``adj_bits[v]`` has bit ``w`` set iff vw is an edge.  No self-loops; the
    relation is kept symmetric by construction.  ``m`` counts unordered
    adjacent pairs.  Instances hash and compare by (n, adjacency), so they can
    be used as dict keys and set members.
    """

    __slots__ = ("n", "m", "adj_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {n}")
        bits = [0] * n
        m = 0
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if not (bits[u] >> v) & 1:
                bits[u] |= 1 << v
                bits[v] |= 1 << u
                m += 1
        self.n = n
        self.m = m
        self.adj_bits = tuple(bits)

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return False
        return bool((self.adj_bits[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.adj_bits[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in canonical (lexicographic) order."""
        for u in range(self.n):
            above = self.adj_bits[u] >> (u + 1)
            for off in _iter_bits(above):
                yield (u, u + 1 + off)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def edge_indices(self) -> list[int]:
        """Canonical indices of the present edges, ascending."""
        return [edge_index(self.n, u, v) for u, v in self.edges()]

    def has_isolated_vertex(self) -> bool:
        return any(b == 0 for b in self.adj_bits) if self.n else False

    def edges_within(self, vertices: Iterable[int]) -> int:
        """Number of edges of the induced subgraph on ``vertices``."""
        mask = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise ParameterError(f"vertex {v} out of range for n={self.n}")
            mask |= 1 << v
        total = 0
        for v in _iter_bits(mask):
            total += (self.adj_bits[v] & mask).bit_count()
        return total // 2

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges deleted (absent pairs are errors)."""
        drop = set()
        for u, v in pairs:
            if not self.has_edge(u, v):
                raise ParameterError(f"({u},{v}) is not an edge")
            drop.add((min(u, v), max(u, v)))
        return Graph(self.n, (e for e in self.edges() if e not in drop))

    # -- identity --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj_bits == other.adj_bits

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- canonical edge indexing ----------------------------------------------


def edge_index(n: int, u: int, v: int) -> int:
    """Rank of the pair (u, v) in lexicographic order over all C(n,2) pairs."""
    if u > v:
        u, v = v, u
    if not (0 <= u < v < n):
        raise ParameterError(f"({u},{v}) is not a vertex pair for n={n}")
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def edge_at(n: int, index: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`."""
    if not 0 <= index < n * (n - 1) // 2:
        raise ParameterError(f"edge index {index} out of range for n={n}")
    u = 0
    row = n - 1  # pairs with first endpoint u
    while index >= row:
        index -= row
        u += 1
        row -= 1
    return (u, u + 1 + index)


# -- generators ------------------------------------------------------------


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in (n, p, seed).

    One MT19937 variate is drawn per vertex pair, in canonical pair order, so
    the random stream (and hence the graph) is identical on every platform.
    """
    if n < 0:
        raise ParameterError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must be in [0,1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part {0..a-1} first, part {a..a+b-1} second."""
    return Graph(a + b, ((u, a + w) for u in range(a) for w in range(b)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G + H with H's labels shifted by |V(G)| (fixed, for reproducibility)."""
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph(g.n + h.n, list(g.edges()) + list(shifted))


def join(g: Graph, h: Graph) -> Graph:
    """G joined to H: disjoint union plus every cross pair.

    Labels: G's first, H's shifted by |V(G)|.  The edge count identity
    m = m_G + m_H + n_G * n_H holds by construction.
    """
    cross = ((u, g.n + w) for u in range(g.n) for w in range(h.n))
    base = disjoint_union(g, h)
    return Graph(base.n, list(base.edges()) + list(cross))


_STANDARD_KINDS = ("complete", "empty", "complete_bipartite", "cycle", "path", "disjoint_union")


def standard_graph(kind: str, *params) -> Graph:
    """Named-family dispatcher used by the CLI; see the individual builders."""
    if kind == "complete":
        return complete_graph(*params)
    if kind == "empty":
        return empty_graph(*params)
    if kind == "complete_bipartite":
        return complete_bipartite(*params)
    if kind == "cycle":
        return cycle_graph(*params)
    if kind == "path":
        return path_graph(*params)
    if kind == "disjoint_union":
        return disjoint_union(*params)
    raise ParameterError(f"unknown graph kind {kind!r}; expected one of {_STANDARD_KINDS}")


# -- triangles ---------------------------------------------------------------


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (a, b, c), a < b < c, in lexicographic order."""
    out = []
    bits = g.adj_bits
    for u in range(g.n):
        above_u = bits[u] >> (u + 1)
        for off in _iter_bits(above_u):
            v = u + 1 + off
            common = (bits[u] & bits[v]) >> (v + 1)  # joint neighbors above v
            for off2 in _iter_bits(common):
                out.append((u, v, v + 1 + off2))
    return out


def triangle_count(g: Graph) -> int:
    return len(triangles(g))


def is_triangular(g: Graph) -> bool:
    """True iff every edge lies in at least one triangle (vacuous at m=0)."""
    bits = g.adj_bits
    return all(bits[u] & bits[v] for u, v in g.edges())


# -- graph6 codec ------------------------------------------------------------
#
# Format: an optional ">>graph6<<" header, then N(n) followed by the upper
# triangle bits x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit
# groups, each group offset by 63.  N(n) is one byte n+63 for n <= 62, else
# 126 plus three 6-bit groups for n <= 258047, else 126 126 plus six groups.

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as one graph6 line (no header, no trailing newline)."""
    n = g.n
    chunks = [_encode_n(n)]
    bit_acc = 0
    bit_len = 0
    out = []
    for v in range(1, n):
        col = g.adj_bits[v]
        for u in range(v):
            bit_acc = (bit_acc << 1) | ((col >> u) & 1)
            bit_len += 1
            if bit_len == 6:
                out.append(chr(bit_acc + 63))
                bit_acc = 0
                bit_len = 0
    if bit_len:
        bit_acc <<= 6 - bit_len
        out.append(chr(bit_acc + 63))
    return chunks[0] + "".join(out)


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ParameterError(f"graph too large for graph6: n={n}")


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is allowed)."""
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise Graph6ParseError("empty graph6 line", base)
    for i, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ParseError(f"byte {code} outside graph6 range 63..126", base + i)
    n, pos = _decode_n(s, base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}",
            base + pos + min(len(body), nbytes),
        )
    edges = []
    bit = 0
    v, u = 1, 0
    for i, ch in enumerate(body):
        group = ord(ch) - 63
        for k in range(5, -1, -1):
            if bit < nbits:
                if (group >> k) & 1:
                    edges.append((u, v))
                bit += 1
                u += 1
                if u == v:
                    v += 1
                    u = 0
            elif (group >> k) & 1:
                raise Graph6ParseError("nonzero padding bits", base + pos + i)
    return Graph(n, edges)


def _decode_n(s: str, base: int) -> tuple[int, int]:
    if s[0] != chr(126):
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] != chr(126):
        if len(s) < 4:
            raise Graph6ParseError("truncated 3-byte vertex count", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    if len(s) < 8:
        raise Graph6ParseError("truncated 6-byte vertex count", base + len(s))
    n = 0
    for ch in s[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 8


def read_graph6(path) -> list[Graph]:
    """All graphs in a graph6 file, one per line; blank lines are skipped."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                out.append(from_graph6(line))
    return out


def write_graph6(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
