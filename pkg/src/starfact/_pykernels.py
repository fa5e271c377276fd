"""Pure-Python word enumeration kernel (fallback for ``_ckernels``)."""

import math

BACKEND = "python"


def _rank0(images):
    n = len(images)
    rank = 0
    for i in range(n):
        x = images[i]
        smaller = 0
        for j in range(i + 1, n):
            if images[j] < x:
                smaller += 1
        rank = rank * (n - i) + smaller
    return rank


def word_counts(n, gens, r, require_all):
    """Count words of ``r`` transpositions drawn from ``gens`` by product.

    ``gens`` is a sequence of 0-based pairs ``(a, b)``.  With
    ``require_all`` only words using every generator at least once count.
    Returns a list of length ``n!`` indexed by the Lehmer rank of the
    product ``g_1 g_2 ... g_r`` (0-based image tuple).
    """
    gens = [(int(a), int(b)) for a, b in gens]
    ngen = len(gens)
    full = (1 << ngen) - 1
    perm = list(range(n))
    leaves = {}

    def rec(depth, mask):
        if depth == r:
            if require_all and mask != full:
                return
            key = tuple(perm)
            leaves[key] = leaves.get(key, 0) + 1
            return
        if require_all and bin(full & ~mask).count("1") > r - depth:
            return
        for gi in range(ngen):
            a, b = gens[gi]
            perm[a], perm[b] = perm[b], perm[a]
            rec(depth + 1, mask | (1 << gi))
            perm[a], perm[b] = perm[b], perm[a]

    if not require_all or ngen <= r:
        rec(0, 0)
    out = [0] * math.factorial(n)
    for key, c in leaves.items():
        out[_rank0(key)] += c
    return out
