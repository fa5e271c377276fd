# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word enumeration kernel; same contract as ``_pykernels``."""

from libc.stdlib cimport calloc, free

BACKEND = "cython"

cdef enum:
    MAXN = 10
    MAXGEN = 64


cdef struct State:
    int n
    int r
    int ngen
    int require_all
    unsigned long long full
    int ga[MAXGEN]
    int gb[MAXGEN]
    int perm[MAXN]
    long long *counts


cdef inline long long rank0(int *images, int n) nogil:
    cdef long long rank = 0
    cdef int i, j, smaller
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if images[j] < images[i]:
                smaller += 1
        rank = rank * (n - i) + smaller
    return rank


cdef inline int popcount(unsigned long long x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void rec(State *s, int depth, unsigned long long mask) nogil:
    cdef int gi, a, b, tmp
    if depth == s.r:
        if s.require_all and mask != s.full:
            return
        s.counts[rank0(s.perm, s.n)] += 1
        return
    if s.require_all and popcount(s.full & ~mask) > s.r - depth:
        return
    for gi in range(s.ngen):
        a = s.ga[gi]
        b = s.gb[gi]
        tmp = s.perm[a]; s.perm[a] = s.perm[b]; s.perm[b] = tmp
        rec(s, depth + 1, mask | (1ULL << gi))
        tmp = s.perm[a]; s.perm[a] = s.perm[b]; s.perm[b] = tmp


def word_counts(int n, gens, int r, bint require_all):
    cdef State s
    cdef long long size = 1
    cdef int i
    gens = [(int(a), int(b)) for a, b in gens]
    if n > MAXN or len(gens) > MAXGEN:
        raise ValueError("kernel limits exceeded (n <= 10, at most 64 generators)")
    for i in range(2, n + 1):
        size *= i
    s.n = n
    s.r = r
    s.ngen = len(gens)
    s.require_all = require_all
    s.full = (1ULL << s.ngen) - 1 if s.ngen < 64 else <unsigned long long>-1
    for i in range(s.ngen):
        s.ga[i] = gens[i][0]
        s.gb[i] = gens[i][1]
    for i in range(n):
        s.perm[i] = i
    s.counts = <long long *>calloc(size, sizeof(long long))
    if s.counts == NULL:
        raise MemoryError()
    try:
        if not require_all or s.ngen <= r:
            with nogil:
                rec(&s, 0, 0)
        return [s.counts[i] for i in range(size)]
    finally:
        free(s.counts)
