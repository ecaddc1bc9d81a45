"""Brute-force oracles, independent of the engine code paths they check.

Everything here scans subsets (or runs a subset DP), so it is only usable at
small n; the suite keeps oracle graphs at n <= 13.
"""

from __future__ import annotations

from functools import lru_cache

from corecorona.graphs import Graph


def independent_masks(g: Graph):
    full = 1 << g.n
    for mask in range(full):
        m = mask
        ok = True
        while m:
            low = m & -m
            m ^= low
            if g.adj[low.bit_length() - 1] & mask:
                ok = False
                break
        if ok:
            yield mask


def brute_alpha(g: Graph) -> int:
    return max((mask.bit_count() for mask in independent_masks(g)), default=0)


def brute_omega(g: Graph) -> list[int]:
    alpha = brute_alpha(g)
    return [mask for mask in independent_masks(g) if mask.bit_count() == alpha]


def brute_maximal(g: Graph) -> list[int]:
    out = []
    for mask in independent_masks(g):
        maximal = True
        for v in range(g.n):
            if (mask >> v) & 1:
                continue
            if g.adj[v] & mask == 0:
                maximal = False
                break
        if maximal:
            out.append(mask)
    return out


def brute_mu(g: Graph) -> int:
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        r = best(rest)  # v stays unmatched
        m = adj[v] & rest
        while m:
            lb = m & -m
            m ^= lb
            r = max(r, 1 + best(rest ^ lb))
        return r

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result


def brute_saturable(g: Graph, a_bits: int, b_bits: int) -> bool:
    """Does a matching saturating A into B exist? Exhaustive assignment."""
    avs = []
    m = a_bits
    while m:
        low = m & -m
        m ^= low
        avs.append(low.bit_length() - 1)

    def go(i: int, used: int) -> bool:
        if i == len(avs):
            return True
        cand = g.adj[avs[i]] & b_bits & ~used
        while cand:
            lb = cand & -cand
            cand ^= lb
            if go(i + 1, used | lb):
                return True
        return False

    return go(0, 0)


def hall_violating_subsets(g: Graph, a_bits: int, b_bits: int) -> list[int]:
    """All nonempty A' with |N(A') intersect B| < |A'|."""
    out = []
    sub = a_bits
    while sub:
        nb = 0
        m = sub
        while m:
            low = m & -m
            m ^= low
            nb |= g.adj[low.bit_length() - 1]
        if (nb & b_bits).bit_count() < sub.bit_count():
            out.append(sub)
        sub = (sub - 1) & a_bits
    return out
