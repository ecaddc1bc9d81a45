# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled bitset kernels for graphs with at most 64 vertices.

Mirrors ``corecorona._kernels.pure`` exactly, including the canonical
emission order of ``maximum_independent_sets``.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    static inline int cc_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int cc_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int cc_popcount64(unsigned long long x) nogil
    int cc_ctz64(unsigned long long x) nogil

DEF MAXN = 64

cdef uint64_t ONE = 1


cdef int _clique_cover_bound(uint64_t* adj, uint64_t p) noexcept nogil:
    cdef int bound = 0
    cdef uint64_t rem = p, bit, clique, cand
    cdef int u, w
    while rem:
        bit = rem & (~rem + 1)
        u = cc_ctz64(bit)
        clique = bit
        cand = adj[u] & rem
        while cand:
            w = cc_ctz64(cand & (~cand + 1))
            clique |= ONE << w
            cand &= adj[w]
        rem &= ~clique
        bound += 1
    return bound


cdef void _alpha_grow(uint64_t* adj, uint64_t p, int size, int* best) noexcept nogil:
    cdef int cnt, d, branch_deg, u, low, branch_v
    cdef uint64_t m, bit, nb, branch_nb, low_nb
    while True:
        cnt = cc_popcount64(p)
        if size + cnt <= best[0]:
            return
        if p == 0:
            best[0] = size
            return
        if cnt >= 10 and size + _clique_cover_bound(adj, p) <= best[0]:
            return
        m = p
        branch_v = -1
        branch_deg = -1
        branch_nb = 0
        low = -1
        low_nb = 0
        while m:
            bit = m & (~m + 1)
            m ^= bit
            u = cc_ctz64(bit)
            nb = adj[u] & p
            d = cc_popcount64(nb)
            if d <= 1:
                low = u
                low_nb = nb
                break
            if d > branch_deg:
                branch_deg = d
                branch_v = u
                branch_nb = nb
        if low >= 0:
            p &= ~((ONE << low) | low_nb)
            size += 1
            continue
        _alpha_grow(adj, p & ~((ONE << branch_v) | branch_nb), size + 1, best)
        p &= ~(ONE << branch_v)


cdef int _load_adj(object adj, uint64_t* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        out[i] = adj[i]
    return n


def independence_number(adj, universe):
    cdef uint64_t adj_c[MAXN]
    cdef int n = _load_adj(adj, adj_c)
    cdef uint64_t uni = universe
    cdef int best = 0
    with nogil:
        _alpha_grow(adj_c, uni, 0, &best)
    return best


cdef bint _enum_exact(uint64_t* adj, uint64_t p, uint64_t chosen, int need,
                      list out, Py_ssize_t cap):
    cdef uint64_t bit
    cdef int v
    while p:
        if cc_popcount64(p) < need:
            return True
        bit = p & (~p + 1)
        p ^= bit
        if need == 1:
            out.append(chosen | bit)
            if len(out) > cap:
                return False
        else:
            v = cc_ctz64(bit)
            if not _enum_exact(adj, p & ~adj[v], chosen | bit, need - 1, out, cap):
                return False
    return True


def maximum_independent_sets(adj, universe, int size, cap):
    cdef uint64_t adj_c[MAXN]
    _load_adj(adj, adj_c)
    if size == 0:
        return [0], True
    cdef list out = []
    cdef bint complete = _enum_exact(adj_c, <uint64_t> universe, 0, size, out, cap)
    return out, complete


cdef bint _bk(uint64_t* comp, uint64_t r, uint64_t p, uint64_t x,
              list out, Py_ssize_t cap):
    cdef uint64_t pux, m, bit, ext
    cdef int u, best_u, best_cnt, c, v
    if p == 0 and x == 0:
        out.append(r)
        return len(out) <= cap
    pux = p | x
    best_u = -1
    best_cnt = -1
    m = pux
    while m:
        bit = m & (~m + 1)
        m ^= bit
        u = cc_ctz64(bit)
        c = cc_popcount64(p & comp[u])
        if c > best_cnt:
            best_cnt = c
            best_u = u
    ext = p & ~comp[best_u]
    while ext:
        bit = ext & (~ext + 1)
        ext ^= bit
        v = cc_ctz64(bit)
        if not _bk(comp, r | bit, p & comp[v], x & comp[v], out, cap):
            return False
        p ^= bit
        x |= bit
    return True


def maximal_independent_sets(adj, universe, cap):
    cdef uint64_t adj_c[MAXN]
    cdef uint64_t comp_c[MAXN]
    cdef int n = _load_adj(adj, adj_c)
    cdef uint64_t uni = universe
    cdef int v
    for v in range(n):
        comp_c[v] = uni & ~adj_c[v] & ~(ONE << v)
    cdef list out = []
    cdef bint complete = _bk(comp_c, 0, uni, 0, out, cap)
    return out, complete


cdef int _lca(int n, int* match, int* parent, int* base, int a, int b) noexcept nogil:
    cdef bint used[MAXN]
    cdef int i
    for i in range(n):
        used[i] = 0
    while True:
        a = base[a]
        used[a] = 1
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if used[b]:
            return b
        b = parent[match[b]]


cdef void _mark_path(int* match, int* parent, int* base, bint* blossom,
                     int v, int b, int child) noexcept nogil:
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[match[v]]] = 1
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


cdef bint _find_path(uint64_t* adj, int n, int* match, int root) noexcept nogil:
    cdef bint used[MAXN]
    cdef int parent[MAXN]
    cdef int base[MAXN]
    cdef int queue[MAXN]
    cdef bint blossom[MAXN]
    cdef int head = 0, tail = 0
    cdef int i, v, to, curbase, u, pv, ppv
    cdef uint64_t m, bit
    for i in range(n):
        used[i] = 0
        parent[i] = -1
        base[i] = i
    used[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        m = adj[v]
        while m:
            bit = m & (~m + 1)
            m ^= bit
            to = cc_ctz64(bit)
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                curbase = _lca(n, match, parent, base, v, to)
                for i in range(n):
                    blossom[i] = 0
                _mark_path(match, parent, base, blossom, v, curbase, to)
                _mark_path(match, parent, base, blossom, to, curbase, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = 1
                            queue[tail] = i
                            tail += 1
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
                    used[match[to]] = 1
                    queue[tail] = match[to]
                    tail += 1
    return False


def matching_number(adj):
    cdef uint64_t adj_c[MAXN]
    cdef int match[MAXN]
    cdef int n = _load_adj(adj, adj_c)
    cdef int v, size = 0
    for v in range(n):
        match[v] = -1
    for v in range(n):
        if match[v] == -1 and adj_c[v] != 0:
            if _find_path(adj_c, n, match, v):
                size += 1
    return size
