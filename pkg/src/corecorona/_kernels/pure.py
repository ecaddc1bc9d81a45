"""Pure-Python bitset kernels.

Graphs enter as a sequence of per-vertex neighbour bitmasks (arbitrary-width
Python ints), so any vertex count works here; the compiled twin in
``_bitkernels`` accelerates the n <= 64 case with machine words.  Both
implementations are exact and must return identical results.

``maximum_independent_sets`` emits members in the package-wide canonical
order (ascending lexicographic order of the sorted vertex lists); callers
rely on that, so the recursion below always extends by the lowest admissible
vertex first.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def _clique_cover_bound(adj: Sequence[int], p: int) -> int:
    # A partition of p into k cliques caps any independent subset at k vertices.
    bound = 0
    rem = p
    while rem:
        bit = rem & -rem
        u = bit.bit_length() - 1
        clique = bit
        cand = adj[u] & rem
        while cand:
            b2 = cand & -cand
            w = b2.bit_length() - 1
            clique |= b2
            cand &= adj[w]
        rem &= ~clique
        bound += 1
    return bound


def independence_number(adj: Sequence[int], universe: int) -> int:
    """Size of a largest independent subset of ``universe``, by branch and bound."""
    best = 0

    def grow(p: int, size: int) -> None:
        nonlocal best
        while True:
            cnt = p.bit_count()
            if size + cnt <= best:
                return
            if p == 0:
                best = size
                return
            if cnt >= 10 and size + _clique_cover_bound(adj, p) <= best:
                return
            m = p
            branch_v = -1
            branch_deg = -1
            branch_nb = 0
            low = -1
            low_nb = 0
            while m:
                bit = m & -m
                m ^= bit
                u = bit.bit_length() - 1
                nb = adj[u] & p
                d = nb.bit_count()
                if d <= 1:
                    low = u
                    low_nb = nb
                    break
                if d > branch_deg:
                    branch_deg = d
                    branch_v = u
                    branch_nb = nb
            if low >= 0:
                # A vertex with at most one remaining neighbour is always in
                # some optimum, so take it without branching.
                p &= ~((1 << low) | low_nb)
                size += 1
                continue
            grow(p & ~((1 << branch_v) | branch_nb), size + 1)
            p &= ~(1 << branch_v)

    grow(universe, 0)
    return best


def maximum_independent_sets(
    adj: Sequence[int], universe: int, size: int, cap: int
) -> tuple[list[int], bool]:
    """All independent subsets of ``universe`` with exactly ``size`` vertices.

    Returns ``(masks, complete)``; when more than ``cap`` sets exist the list
    holds the first ``cap + 1`` found and ``complete`` is False.  Emission is
    canonical: lowest admissible vertex first.
    """
    if size == 0:
        return [0], True
    out: list[int] = []

    def extend(p: int, chosen: int, need: int) -> bool:
        while p:
            if p.bit_count() < need:
                return True
            bit = p & -p
            p ^= bit
            if need == 1:
                out.append(chosen | bit)
                if len(out) > cap:
                    return False
            else:
                v = bit.bit_length() - 1
                if not extend(p & ~adj[v], chosen | bit, need - 1):
                    return False
        return True

    complete = extend(universe, 0, size)
    return out, complete


def maximal_independent_sets(
    adj: Sequence[int], universe: int, cap: int
) -> tuple[list[int], bool]:
    """All inclusion-maximal independent subsets of ``universe``, unsorted.

    Bron-Kerbosch with pivoting over non-neighbourhoods; cap semantics as in
    :func:`maximum_independent_sets`.
    """
    n = len(adj)
    comp = [universe & ~adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> bool:
        if p == 0 and x == 0:
            out.append(r)
            return len(out) <= cap
        pux = p | x
        best_u = -1
        best_cnt = -1
        m = pux
        while m:
            bit = m & -m
            m ^= bit
            u = bit.bit_length() - 1
            c = (p & comp[u]).bit_count()
            if c > best_cnt:
                best_cnt = c
                best_u = u
        ext = p & ~comp[best_u]
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            if not bk(r | bit, p & comp[v], x & comp[v]):
                return False
            p ^= bit
            x |= bit
        return True

    complete = bk(0, universe, 0)
    return out, complete


def matching_number(adj: Sequence[int]) -> int:
    """Maximum matching size on a general graph (Edmonds blossom contraction)."""
    n = len(adj)
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> bool:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            m = adj[v]
            while m:
                bit = m & -m
                m ^= bit
                to = bit.bit_length() - 1
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    if not used[match[to]]:
                        used[match[to]] = True
                        queue.append(match[to])
        return False

    size = 0
    for v in range(n):
        if match[v] == -1 and adj[v]:
            if find_path(v):
                size += 1
    return size
