# cython: language_level=3
"""Compiled twins of the pure-Python search kernels (universes <= 64).

Same deterministic contracts as ``_kernels_py``: canonical-first answers,
identical results on every input both backends accept.  All state lives on
the call stack, so the functions stay reentrant like their pure twins.
"""

from libc.stdint cimport uint64_t


cdef inline int _popcount(uint64_t x) nogil:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _lowest_bit(uint64_t x) nogil:
    cdef int i = 0
    while not (x >> i) & 1:
        i += 1
    return i


cdef inline uint64_t _above(uint64_t x, int i) nogil:
    # bits of x strictly above position i (shift by 64 is UB, guard it)
    if i >= 63:
        return 0
    return x >> (i + 1) << (i + 1)


cdef bint _clique_rec(uint64_t* adj, int m, int depth, uint64_t candidates,
                      int* out) nogil:
    cdef int i, need = m - depth
    cdef uint64_t c, rest
    if need == 0:
        return True
    if _popcount(candidates) < need:
        return False
    c = candidates
    while c:
        i = _lowest_bit(c)
        c &= c - 1
        if _popcount(_above(candidates, i)) + 1 < need:
            return False
        out[depth] = i
        rest = _above(candidates & adj[i], i)
        if _clique_rec(adj, m, depth + 1, rest, out):
            return True
    return False


def find_clique(list masks, int m):
    """First m-clique in lexicographic vertex order, or None (certified)."""
    cdef int n = len(masks)
    cdef int i
    cdef uint64_t adj[64]
    cdef int out[64]
    cdef uint64_t full
    if m < 1:
        raise ValueError("m must be >= 1")
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    if m > n:
        return None
    for i in range(n):
        adj[i] = <uint64_t> masks[i]
    if n == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t> 1) << n) - 1
    if _clique_rec(adj, m, 0, full, out):
        return tuple(out[i] for i in range(m))
    return None


cdef int _choose_vertex(uint64_t* adj, uint64_t* forbid, int* colors, int n) nogil:
    cdef int v, best = -1
    cdef int sat, deg, best_sat = -1, best_deg = -1
    for v in range(n):
        if colors[v] != -1:
            continue
        sat = _popcount(forbid[v])
        deg = _popcount(adj[v])
        if sat > best_sat or (sat == best_sat and deg > best_deg):
            best = v
            best_sat = sat
            best_deg = deg
    return best


cdef bint _color_rec(uint64_t* adj, uint64_t* forbid, int* colors,
                     int n, int k, int assigned, int used) nogil:
    cdef int v, c, w, limit
    cdef uint64_t touched, mask
    if assigned == n:
        return True
    v = _choose_vertex(adj, forbid, colors, n)
    limit = used + 1
    if limit > k:
        limit = k
    for c in range(limit):
        if (forbid[v] >> c) & 1:
            continue
        colors[v] = c
        touched = 0
        mask = adj[v]
        while mask:
            w = _lowest_bit(mask)
            mask &= mask - 1
            if not (forbid[w] >> c) & 1:
                forbid[w] |= (<uint64_t> 1) << c
                touched |= (<uint64_t> 1) << w
        if _color_rec(adj, forbid, colors, n, k,
                      assigned + 1, used if used > c + 1 else c + 1):
            return True
        colors[v] = -1
        while touched:
            w = _lowest_bit(touched)
            touched &= touched - 1
            forbid[w] &= ~((<uint64_t> 1) << c)
    return False


cdef int _greedy_clique_size(uint64_t* adj, int n) nogil:
    cdef int best = 0, start, size, pick, pick_deg, i, deg
    cdef uint64_t cand, c
    for start in range(n):
        size = 1
        cand = adj[start]
        while cand:
            pick = -1
            pick_deg = -1
            c = cand
            while c:
                i = _lowest_bit(c)
                c &= c - 1
                deg = _popcount(cand & adj[i])
                if deg > pick_deg:
                    pick = i
                    pick_deg = deg
            size += 1
            cand &= adj[pick]
        if size > best:
            best = size
    return best


def chromatic_number(list masks):
    """Exact chromatic number with an optimal proper coloring."""
    cdef int n = len(masks)
    cdef int i, k, lower
    cdef uint64_t adj[64]
    cdef uint64_t forbid[64]
    cdef int colors[64]
    if n == 0:
        return 0, []
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    for i in range(n):
        adj[i] = <uint64_t> masks[i]
    lower = _greedy_clique_size(adj, n)
    if lower < 1:
        lower = 1
    for k in range(lower, n + 1):
        for i in range(n):
            colors[i] = -1
            forbid[i] = 0
        if _color_rec(adj, forbid, colors, n, k, 0, 0):
            return k, [colors[i] for i in range(n)]
    raise AssertionError("unreachable: n colors always suffice")


def min_subfamily(list masks, full):
    """Smallest index subset with the family's intersection; (size, lex) order."""
    cdef int n = len(masks)
    cdef uint64_t buf[64]
    cdef int idx[64]
    cdef uint64_t prefix[65]
    cdef uint64_t target, full64, acc
    cdef int i, j, size
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    full64 = <uint64_t> full
    target = full64
    for i in range(n):
        buf[i] = <uint64_t> masks[i]
        target &= buf[i]
    if full64 == target:
        return ()
    for size in range(1, n + 1):
        for i in range(size):
            idx[i] = i
        while True:
            prefix[0] = full64
            for i in range(size):
                prefix[i + 1] = prefix[i] & buf[idx[i]]
            if prefix[size] == target:
                return tuple(idx[i] for i in range(size))
            i = size - 1
            while i >= 0 and idx[i] == n - size + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, size):
                idx[j] = idx[j - 1] + 1
    raise AssertionError("unreachable: the full family always works")
