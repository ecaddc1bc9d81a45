"""Exact independence machinery: alpha, maximum/maximal families, core, corona.

Everything is computed by exhaustive branch-and-bound search, never
heuristically; the n <= 10 brute-force subset scan in the test suite is the
correctness contract.  Results for a graph are cached (graphs are immutable
and hash by structure), so repeated checker calls stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from corecorona import _kernels
from corecorona.graphs import Graph, VertexSet

DEFAULT_CAP = 10**6

KIND_MAX_INDEPENDENT = "maximum_independent"
KIND_MAX_CLIQUE = "maximum_clique"
KIND_ARBITRARY = "arbitrary"


class CapExceededError(RuntimeError):
    """An enumeration found more members than its cap allows.

    Partial output is never returned to callers: core/corona and the subset
    searches would silently be wrong on a truncated family.
    """

    def __init__(self, what: str, cap: int, partial_count: int):
        super().__init__(f"{what}: more than {cap} members exist (found {partial_count})")
        self.what = what
        self.cap = cap
        self.partial_count = partial_count


@dataclass(frozen=True)
class MisFamily:
    """An explicit family of vertex sets over one graph's vertices."""

    graph_n: int
    members: tuple[VertexSet, ...]
    kind: str = KIND_ARBITRARY

    def __post_init__(self) -> None:
        seen = set()
        for m in self.members:
            if m.n != self.graph_n:
                raise ValueError("family member bound to a different graph")
            if m.bits in seen:
                raise ValueError("family members must be pairwise distinct")
            seen.add(m.bits)

    @classmethod
    def from_masks(cls, n: int, masks: list[int], kind: str = KIND_ARBITRARY) -> "MisFamily":
        return cls(n, tuple(VertexSet(n, b) for b in masks), kind)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __getitem__(self, i: int) -> VertexSet:
        return self.members[i]

    def intersection(self) -> VertexSet:
        if not self.members:
            raise ValueError("intersection of an empty family is undefined")
        bits = self.members[0].bits
        for m in self.members[1:]:
            bits &= m.bits
        return VertexSet(self.graph_n, bits)

    def union(self) -> VertexSet:
        if not self.members:
            raise ValueError("union of an empty family is undefined")
        bits = 0
        for m in self.members:
            bits |= m.bits
        return VertexSet(self.graph_n, bits)


@dataclass(frozen=True)
class CoreCorona:
    core: VertexSet
    corona: VertexSet
    alpha: int
    omega_count: int


def canonical_sorted(members: list[VertexSet]) -> tuple[VertexSet, ...]:
    """Canonical family order: ascending lexicographic on sorted vertex lists."""
    return tuple(sorted(members, key=lambda m: m.vertices()))


def _full(n: int) -> int:
    return (1 << n) - 1


@lru_cache(maxsize=65536)
def independence_number(g: Graph) -> int:
    """alpha(G), exact."""
    return _kernels.independence_number(g.adj, _full(g.n))


@lru_cache(maxsize=8192)
def enumerate_omega(g: Graph, cap: int = DEFAULT_CAP) -> MisFamily:
    """Every maximum independent set, in canonical order; complete or error."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    alpha = independence_number(g)
    masks, complete = _kernels.maximum_independent_sets(g.adj, _full(g.n), alpha, cap)
    if not complete:
        raise CapExceededError("maximum independent sets", cap, len(masks))
    # the kernel already emits in canonical order
    return MisFamily.from_masks(g.n, masks, KIND_MAX_INDEPENDENT)


def core_corona(g: Graph, cap: int = DEFAULT_CAP) -> CoreCorona:
    """Intersection and union over the family of maximum independent sets."""
    omega = enumerate_omega(g, cap)
    return CoreCorona(
        core=omega.intersection(),
        corona=omega.union(),
        alpha=independence_number(g),
        omega_count=len(omega),
    )


@lru_cache(maxsize=8192)
def enumerate_maximal_independent(g: Graph, cap: int = DEFAULT_CAP) -> MisFamily:
    """Every inclusion-maximal independent set, in canonical order."""
    return maximal_independent_within(g, g.full_set(), cap)


def maximal_independent_within(g: Graph, universe: VertexSet, cap: int = DEFAULT_CAP) -> MisFamily:
    """Maximal independent subsets of the induced subgraph on ``universe``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if universe.n != g.n:
        raise ValueError("universe bound to a different graph")
    masks, complete = _kernels.maximal_independent_sets(g.adj, universe.bits, cap)
    if not complete:
        raise CapExceededError("maximal independent sets", cap, len(masks))
    members = canonical_sorted([VertexSet(g.n, b) for b in masks])
    return MisFamily(g.n, members, KIND_ARBITRARY)


def is_very_well_covered(g: Graph) -> bool:
    """True iff 2*alpha(G) = n and all maximal independent sets share one size."""
    if 2 * independence_number(g) != g.n:
        return False
    sizes = {len(m) for m in enumerate_maximal_independent(g)}
    return len(sizes) <= 1


def clique_number(g: Graph) -> int:
    """omega(G), via independence on the complement."""
    return independence_number(g.complement())


def enumerate_max_cliques(g: Graph, cap: int = DEFAULT_CAP) -> MisFamily:
    """Every maximum clique: the maximum independent sets of the complement."""
    omega = enumerate_omega(g.complement(), cap)
    return MisFamily(g.n, omega.members, KIND_MAX_CLIQUE)
