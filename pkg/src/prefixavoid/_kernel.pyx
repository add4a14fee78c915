# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel. Same contract as ``_kernel_py.count_completions``."""

from libc.stdlib cimport malloc, free


cdef struct Packed:
    int n
    int npat
    int* vals      # all pattern values, concatenated
    int* adj       # adjacency flags, same offsets as vals
    int* off
    int* length
    int* word
    int* used
    int* idx       # scratch for one occurrence search


cdef bint ends_at(int* w, int m, int* p, int* adj, int k, int* idx) nogil:
    cdef int a, b, lo, v
    cdef bint ok
    if m < k - 1:
        return False
    if k == 1:
        return True
    idx[k - 1] = m
    a = k - 2
    idx[a] = m
    while True:
        idx[a] -= 1
        lo = idx[a + 1] - 1 if adj[a] else a
        if idx[a] < lo:
            a += 1
            if a == k - 1:
                return False
            continue
        v = w[idx[a]]
        ok = True
        for b in range(a + 1, k):
            if (v < w[idx[b]]) != (p[a] < p[b]):
                ok = False
                break
        if ok:
            if a == 0:
                return True
            a -= 1
            idx[a] = idx[a + 1]


cdef bint hits(Packed* c, int m) nogil:
    cdef int q, o
    for q in range(c.npat):
        o = c.off[q]
        if ends_at(c.word, m, c.vals + o, c.adj + o, c.length[q], c.idx):
            return True
    return False


cdef unsigned long long dfs(Packed* c, int pos, list witnesses, bint collect, long cap):
    cdef int v, n = c.n
    cdef unsigned long long total = 0
    if pos == n:
        if collect and len(witnesses) < cap:
            witnesses.append(tuple([c.word[i] for i in range(n)]))
        return 1
    for v in range(1, n + 1):
        if c.used[v]:
            continue
        c.word[pos] = v
        if hits(c, pos):
            continue
        c.used[v] = 1
        total += dfs(c, pos + 1, witnesses, collect, cap)
        c.used[v] = 0
    return total


cdef unsigned long long dfs_naive(Packed* c, int pos, list witnesses, bint collect, long cap):
    cdef int v, m, n = c.n
    cdef unsigned long long total = 0
    if pos == n:
        for m in range(n):
            if hits(c, m):
                return 0
        if collect and len(witnesses) < cap:
            witnesses.append(tuple([c.word[i] for i in range(n)]))
        return 1
    for v in range(1, n + 1):
        if c.used[v]:
            continue
        c.word[pos] = v
        c.used[v] = 1
        total += dfs_naive(c, pos + 1, witnesses, collect, cap)
        c.used[v] = 0
    return total


def count_completions(int n, prefix, patterns, bint collect=False, long cap=0, bint prune=True):
    cdef Packed c
    cdef int i, q, total_len = 0, maxk = 1, t
    cdef list pats = [(tuple(p), tuple(a)) for p, a in patterns]
    cdef list witnesses = []
    cdef unsigned long long count

    prefix = list(prefix)
    t = len(prefix)
    if n - t > 20:
        raise ValueError("more than 20 free positions cannot be enumerated")
    for p, a in pats:
        total_len += len(p)
        maxk = max(maxk, len(p))

    c.n = n
    c.npat = len(pats)
    c.vals = <int*> malloc(sizeof(int) * (total_len + 1))
    c.adj = <int*> malloc(sizeof(int) * (total_len + 1))
    c.off = <int*> malloc(sizeof(int) * (c.npat + 1))
    c.length = <int*> malloc(sizeof(int) * (c.npat + 1))
    c.word = <int*> malloc(sizeof(int) * (n + 1))
    c.used = <int*> malloc(sizeof(int) * (n + 1))
    c.idx = <int*> malloc(sizeof(int) * (maxk + 1))
    try:
        o = 0
        for q, (p, a) in enumerate(pats):
            c.off[q] = o
            c.length[q] = len(p)
            for i in range(len(p)):
                c.vals[o + i] = p[i]
                c.adj[o + i] = 1 if (i < len(a) and a[i]) else 0
            o += len(p)
        for i in range(n + 1):
            c.used[i] = 0
        for i in range(t):
            c.word[i] = prefix[i]
            c.used[prefix[i]] = 1

        if prune:
            for i in range(t):
                if hits(&c, i):
                    return 0, witnesses
            count = dfs(&c, t, witnesses, collect, cap)
        else:
            count = dfs_naive(&c, t, witnesses, collect, cap)
        return int(count), witnesses
    finally:
        free(c.vals)
        free(c.adj)
        free(c.off)
        free(c.length)
        free(c.word)
        free(c.used)
        free(c.idx)
