"""Matchings: saturation certificates, maximum matching, Koenig-Egervary test.

``saturating_matching`` settles the bipartite question "can A be matched into
B using only graph edges between them" and always returns a certificate:
either a matching covering all of A, or an inclusion-minimal subset of A with
too few neighbours in B.  The two outcomes are mutually exclusive and
exhaustive.  General maximum matching uses blossom contraction, so it is
exact at any supported size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from corecorona import _kernels
from corecorona.graphs import Graph, VertexSet


@dataclass(frozen=True)
class Matching:
    """Pairwise non-incident edges, optionally claimed to saturate a set."""

    edges: tuple[tuple[int, int], ...]
    saturates: VertexSet | None = None

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self, n: int) -> VertexSet:
        bits = 0
        for u, v in self.edges:
            bits |= (1 << u) | (1 << v)
        return VertexSet(n, bits)

    def validate(self, g: Graph) -> None:
        """Raise unless every edge exists, edges are pairwise non-incident,
        and the claimed saturated set is fully covered."""
        seen = 0
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise ValueError(f"matching edge {u}-{v} not present in graph")
            mask = (1 << u) | (1 << v)
            if seen & mask:
                raise ValueError(f"matching edges share endpoint at {u}-{v}")
            seen |= mask
        if self.saturates is not None and self.saturates.bits & ~seen:
            missing = VertexSet(self.saturates.n, self.saturates.bits & ~seen)
            raise ValueError(f"matching misses claimed vertices {list(missing)}")


@dataclass(frozen=True)
class HallCertificate:
    """Either a matching saturating A into B, or a minimal violating subset."""

    matching: Matching | None = None
    violator: VertexSet | None = None

    def __post_init__(self) -> None:
        if (self.matching is None) == (self.violator is None):
            raise ValueError("exactly one of matching/violator must be present")

    @property
    def saturated(self) -> bool:
        return self.matching is not None


def _bipartite_match(g: Graph, a_bits: int, b_bits: int) -> dict[int, int]:
    """Augmenting-path matching of A-vertices into B; returns b->a pairs."""
    pair_of_b: dict[int, int] = {}
    adj = g.adj

    def try_augment(u: int, state: list[int]) -> bool:
        # state[0] holds the B-vertices already pulled into this attempt's
        # alternating tree; claiming them up front keeps every vertex visited
        # at most once per attempt.
        avail = adj[u] & b_bits & ~state[0]
        state[0] |= avail
        m = avail
        while m:  # free B-vertices first
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if w not in pair_of_b:
                pair_of_b[w] = u
                return True
        m = avail
        while m:  # otherwise displace a current partner
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if try_augment(pair_of_b[w], state):
                pair_of_b[w] = u
                return True
        return False

    bits = a_bits
    while bits:
        low = bits & -bits
        bits ^= low
        try_augment(low.bit_length() - 1, [0])
    return pair_of_b


def _is_saturable(g: Graph, a_bits: int, b_bits: int) -> bool:
    return len(_bipartite_match(g, a_bits, b_bits)) == a_bits.bit_count()


def saturating_matching(g: Graph, a: VertexSet, b: VertexSet) -> HallCertificate:
    """Match A into B over the edges of ``g`` joining them.

    Returns a saturating matching when one exists, otherwise an
    inclusion-minimal A' with |N(A') intersect B| < |A'| (every proper
    nonempty subset of A' is saturable).
    """
    if a.n != g.n or b.n != g.n:
        raise ValueError("vertex sets bound to a different graph")
    if a.bits & b.bits:
        raise ValueError("A and B must be disjoint")
    pairs = _bipartite_match(g, a.bits, b.bits)
    if len(pairs) == len(a):
        edges = tuple(sorted((min(u, w), max(u, w)) for w, u in pairs.items()))
        matching = Matching(edges, saturates=a)
        matching.validate(g)
        return HallCertificate(matching=matching)
    # Shrink A to a minimal unsaturable subset; subsets of saturable sets are
    # saturable, so a single ascending pass leaves an inclusion-minimal set.
    violator_bits = a.bits
    probe = a.bits
    while probe:
        low = probe & -probe
        probe ^= low
        reduced = violator_bits & ~low
        if reduced and not _is_saturable(g, reduced, b.bits):
            violator_bits = reduced
    violator = VertexSet(g.n, violator_bits)
    nb = g.neighborhood(violator) & b
    if len(nb) >= len(violator):
        raise AssertionError("internal error: violator fails its defining inequality")
    return HallCertificate(violator=violator)


@lru_cache(maxsize=65536)
def maximum_matching_size(g: Graph) -> int:
    """mu(G) on general graphs, exact."""
    return _kernels.matching_number(g.adj)


def is_koenig_egervary(g: Graph) -> bool:
    """True iff alpha(G) + mu(G) = n."""
    from corecorona.independence import independence_number

    return independence_number(g) + maximum_matching_size(g) == g.n
