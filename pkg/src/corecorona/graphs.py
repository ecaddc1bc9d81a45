"""Immutable bitset graphs with parsers, serializers, and family generators.

Vertices are 0-based ints; adjacency is one neighbour bitmask per vertex.
Optional display labels (e.g. ``"v13"``) ride along for reporting but never
affect equality or hashing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

PRNG_NAME = "mt19937 (random.Random)"


class GraphFormatError(ValueError):
    """Malformed graph text; carries the byte offset when known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class VertexSet:
    """A subset of 0..n-1, bound to the vertex count of its host graph."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} outside 0..{self.n - 1}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def _check_bound(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(
                f"vertex sets bound to different graphs (n={self.n} vs n={other.n})"
            )

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_bound(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_bound(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_bound(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_bound(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_bound(other)
        return self.bits & other.bits == 0

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, vertices={list(self)})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; equality and hashing ignore labels."""

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            m = row
            while m:
                low = m & -m
                m ^= low
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels length must equal vertex count")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop {u}-{v} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels else ())

    # -- elementary queries -------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                m ^= low
                out.append((u, low.bit_length() - 1))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.labels[v]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    # -- vertex-set helpers --------------------------------------------------

    def vset(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.from_vertices(self.n, vertices)

    def vset_from_labels(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet.from_vertices(self.n, (self.index_of(s) for s in labels))

    def full_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def empty_set(self) -> VertexSet:
        return VertexSet.empty(self.n)

    # -- set algebra over the graph -------------------------------------------

    def neighborhood(self, a: VertexSet) -> VertexSet:
        """N(A): every vertex with at least one neighbour in A (A's own
        members included whenever they have a neighbour inside A)."""
        if a.n != self.n:
            raise ValueError("vertex set bound to a different graph")
        bits = 0
        for v in a:
            bits |= self.adj[v]
        return VertexSet(self.n, bits)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        adj = tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj))
        return Graph(self.n, adj, self.labels)

    def is_independent(self, s: VertexSet) -> bool:
        if s.n != self.n:
            raise ValueError("vertex set bound to a different graph")
        bits = s.bits
        m = bits
        while m:
            low = m & -m
            m ^= low
            if self.adj[low.bit_length() - 1] & bits:
                return False
        return True

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- module-level aliases matching the operation surface ------------------------


def neighborhood(g: Graph, a: VertexSet) -> VertexSet:
    return g.neighborhood(a)


def complement(g: Graph) -> Graph:
    return g.complement()


def is_independent(g: Graph, s: VertexSet) -> bool:
    return g.is_independent(s)


# -- graph6 ---------------------------------------------------------------------


def _g6_bytes_for_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string (optional ``>>graph6<<`` header allowed)."""
    data = text.rstrip("\n")
    offset = 0
    if data.startswith(">>graph6<<"):
        data = data[10:]
        offset = 10
    if not data:
        raise GraphFormatError("empty graph6 string", offset)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", offset + i)
    if data[0] != "~":
        n = ord(data[0]) - 63
        pos = 1
    elif len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field", offset + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field", offset + len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nchars:
        raise GraphFormatError(
            f"graph6 bit field truncated: need {nchars} bytes, got {len(body)}",
            offset + len(data),
        )
    if len(body) > nchars:
        raise GraphFormatError("trailing bytes after graph6 bit field", offset + pos + nchars)
    adj = [0] * n
    bit_index = 0
    for ch in body:
        val = ord(ch) - 63
        for k in range(5, -1, -1):
            if bit_index >= nbits:
                if (val >> k) & 1:
                    raise GraphFormatError("nonzero padding in graph6 bit field", offset + pos)
                bit_index += 1
                continue
            if (val >> k) & 1:
                # bits run column-major over the upper triangle: (0,1), (0,2), (1,2), ...
                j = 1
                t = bit_index
                while t >= j:
                    t -= j
                    j += 1
                i = t
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return Graph(n, tuple(adj))


def serialize_graph6(g: Graph) -> str:
    out = [_g6_bytes_for_n(g.n)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = 0
                nacc = 0
    if nacc:
        acc <<= 6 - nacc
        out.append(chr(acc + 63))
    return "".join(out)


# -- DIMACS-like edge list --------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``e u v`` lines (1-based labels).

    Duplicate edges collapse silently; loops and out-of-range indices are
    errors.  Original 1-based labels are kept for display.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError(f"duplicate 'n' line at line {lineno}")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"bad 'n' line at line {lineno}: {raw!r}")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"edge before 'n' line at line {lineno}")
            if len(parts) != 3:
                raise GraphFormatError(f"bad 'e' line at line {lineno}: {raw!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint at line {lineno}") from None
            if u == v:
                raise GraphFormatError(f"loop {u}-{v} at line {lineno}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n} at line {lineno}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r} at line {lineno}")
    if n is None:
        raise GraphFormatError("missing 'n' line")
    return Graph.from_edges(n, edges, labels=[str(i + 1) for i in range(n)])


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- generators --------------------------------------------------------------------


@dataclass(frozen=True)
class GraphFamilySpec:
    """Deterministic recipe for a graph: same spec and seed, same graph."""

    kind: str  # erdos_renyi | star | path | cycle | complete_bipartite | explicit
    n: int = 0
    p: float = 0.0
    parts: tuple[int, int] = (0, 0)
    seed: int = 0
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        kinds = {"erdos_renyi", "star", "path", "cycle", "complete_bipartite", "explicit"}
        if self.kind not in kinds:
            raise ValueError(f"unknown graph family {self.kind!r}")
        if self.kind == "erdos_renyi" and not 0.0 <= self.p <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        if self.n < 0 or min(self.parts) < 0:
            raise ValueError("sizes must be non-negative")


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre 0 joined to every other vertex."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n,2) pairs drawn independently, in lexicographic
    (u, v) order, from Python's Mersenne Twister seeded with ``seed``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def generate(spec: GraphFamilySpec) -> Graph:
    if spec.kind == "erdos_renyi":
        return erdos_renyi(spec.n, spec.p, spec.seed)
    if spec.kind == "star":
        return star(spec.n)
    if spec.kind == "path":
        return path_graph(spec.n)
    if spec.kind == "cycle":
        return cycle_graph(spec.n)
    if spec.kind == "complete_bipartite":
        return complete_bipartite(*spec.parts)
    return Graph.from_edges(spec.n, spec.edges)
