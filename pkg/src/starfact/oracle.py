"""Brute-force factorization censuses.

Every word is enumerated explicitly by :mod:`starfact.kernels`; the only
cleverness is incremental product maintenance inside the kernel.  Budgets
count words, not seconds, so limits are machine independent.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .combinatorics import (
    Partition,
    Permutation,
    perm_rank,
    perm_unrank,
    permutations_by_class,
)
from .errors import DomainError, ResourceLimitError

DEFAULT_BUDGET = 10**8
MAX_N = 10


def default_budget() -> int:
    """Word budget, overridable through ``STARFACT_BUDGET``."""
    raw = os.environ.get("STARFACT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"STARFACT_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError("STARFACT_BUDGET must be >= 1")
    return value


@dataclass(frozen=True)
class ClassCount:
    min: int
    max: int

    @property
    def uniform(self) -> bool:
        return self.min == self.max

    @property
    def count(self) -> int | None:
        return self.min if self.uniform else None


@dataclass(frozen=True)
class FactorizationCensus:
    n: int
    r: int
    kind: str
    counts: dict[Partition, ClassCount]

    def is_uniform(self) -> bool:
        return all(c.uniform for c in self.counts.values())

    def uniform_counts(self) -> dict[Partition, int | None]:
        return {alpha: c.count for alpha, c in self.counts.items()}


def star_generators(n: int, pivot: str = "n") -> list[tuple[int, int]]:
    """0-based pairs for the star transpositions ``(j pivot)``."""
    if pivot == "n":
        return [(j, n - 1) for j in range(n - 1)]
    if pivot == "one":
        return [(0, j) for j in range(1, n)]
    raise DomainError(f"pivot must be 'n' or 'one', got {pivot!r}")


def _check(n: int, r: int, words: int, budget: int | None) -> None:
    if n < 1 or r < 0:
        raise DomainError(f"need n >= 1 and r >= 0, got n={n}, r={r}")
    if n > MAX_N:
        raise ResourceLimitError(f"n={n} exceeds enumeration cap {MAX_N}", n=n, r=r)
    budget = default_budget() if budget is None else budget
    if words > budget:
        raise ResourceLimitError(
            f"{words} words for n={n}, r={r} exceed the budget of {budget}",
            n=n, r=r, words=words, budget=budget,
        )


def star_word_counts(n: int, r: int, budget: int | None = None, pivot: str = "n") -> list[int]:
    """Transitive star words of length ``r`` counted by product (indexed by Lehmer rank)."""
    gens = star_generators(n, pivot)
    _check(n, r, len(gens) ** r, budget)
    return kernels.word_counts(n, gens, r, True)


def _census(n: int, r: int, kind: str, per_rank: list[int]) -> FactorizationCensus:
    counts = {}
    for alpha, perms in permutations_by_class(n).items():
        values = [per_rank[perm_rank(p)] for p in perms]
        counts[alpha] = ClassCount(min(values), max(values))
    return FactorizationCensus(n, r, kind, counts)


def census_star_words(n: int, r: int, budget: int | None = None, pivot: str = "n") -> FactorizationCensus:
    return _census(n, r, "star", star_word_counts(n, r, budget, pivot))


def count_star_factorizations(sigma: Permutation, r: int, budget: int | None = None, pivot: str = "n") -> int:
    return star_word_counts(len(sigma), r, budget, pivot)[perm_rank(sigma)]


def hurwitz_word_counts(n: int, r: int, budget: int | None = None) -> list[int]:
    """Words ``(t_1, ..., t_r, rho)`` with arbitrary transpositions ``t`` and an
    ``n``-cycle ``rho`` placed last, counted by product."""
    gens = list(combinations(range(n), 2))
    ncycles = math.factorial(n - 1) if n >= 1 else 0
    _check(n, r, len(gens) ** r * ncycles, budget)
    prefix = kernels.word_counts(n, gens, r, False)
    cycles = permutations_by_class(n)[Partition([n])]
    out = [0] * len(prefix)
    for rank, c in enumerate(prefix):
        if not c:
            continue
        p = perm_unrank(rank, n)
        for rho in cycles:
            out[perm_rank(p[x - 1] for x in rho)] += c
    return out


def census_hurwitz_words(n: int, r: int, budget: int | None = None) -> FactorizationCensus:
    return _census(n, r, "hurwitz", hurwitz_word_counts(n, r, budget))


def transitivity_check_generic(gens, n: int) -> bool:
    """Union-find over the cycles of every generator; true iff one orbit."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(1, n + 1):
            a, b = find(x), find(g[x - 1])
            if a != b:
                parent[a] = b
    return len({find(x) for x in range(1, n + 1)}) <= 1


def star_words_covering(word, n: int, pivot: str = "n") -> bool:
    """Generator-coverage criterion: every star transposition occurs in ``word``."""
    needed = {tuple(sorted(g)) for g in star_generators(n, pivot)}
    return needed <= {tuple(sorted(g)) for g in word}


def word_product(word, n: int) -> Permutation:
    """Product of 0-based transposition pairs as ``x -> t_1(...t_r(x))``."""
    images = list(range(1, n + 1))
    for a, b in word:
        images[a], images[b] = images[b], images[a]
    return Permutation._trusted(images)


def inclusion_exclusion_total(n: int, r: int) -> int:
    """Number of star words of length ``r`` using every generator."""
    return sum((-1) ** j * math.comb(n - 1, j) * (n - 1 - j) ** r for j in range(n))


def census_to_rows(census: FactorizationCensus) -> list[dict]:
    return [
        {"class": alpha, "count": c.count, "min": c.min, "max": c.max, "uniform": c.uniform}
        for alpha, c in census.counts.items()
    ]

