"""Partitions, permutations and class-counting formulas.

Partitions are stored with parts in weakly decreasing order.  Permutations
act on ``{1..n}``; ``p[i - 1]`` is the image of ``i``.  A word
``t_1 t_2 ... t_r`` evaluates as ``x -> t_1(t_2(...t_r(x)))``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError, PartitionParseError


class Partition(tuple):
    """An integer partition in canonical (weakly decreasing) form."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise DomainError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def union(self, *parts: int) -> Partition:
        """``alpha ∪ m``: insert new parts."""
        return Partition(self + parts)

    def remove(self, part: int) -> Partition:
        """``alpha \\ part``: drop one copy of ``part``."""
        lst = list(self)
        try:
            lst.remove(part)
        except ValueError:
            raise DomainError(f"{part} is not a part of {tuple(self)}") from None
        return Partition(lst)

    def product(self) -> int:
        return math.prod(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"`` (any order, whitespace ignored). ``""`` is the empty partition."""
    if not text.strip():
        return EMPTY
    parts = []
    pos = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        where = pos + (len(chunk) - len(chunk.lstrip()))
        if not stripped.isdigit():
            raise PartitionParseError(f"invalid part {stripped!r}", where)
        value = int(stripped)
        if value < 1:
            raise PartitionParseError(f"part must be positive, got {value}", where)
        parts.append(value)
        pos += len(chunk) + 1
    return Partition(parts)


def format_partition(alpha: Iterable[int]) -> str:
    return ",".join(str(p) for p in alpha)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    return list(_partitions(n, n))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield Partition((first,) + rest)


def aut_size(alpha: Partition) -> int:
    return math.prod(math.factorial(f) for f in Counter(alpha).values())


def class_size(alpha: Partition) -> int:
    n = sum(alpha)
    return math.factorial(n) // (math.prod(alpha) * aut_size(alpha))


def pivot_class_size(i: int, alpha: Partition) -> int:
    """Number of permutations of ``[i + |alpha|]`` whose pivot lies on an
    ``i``-cycle and whose other cycles have lengths ``alpha``."""
    if i < 1:
        raise DomainError(f"pivot cycle length must be >= 1, got {i}")
    n = i + sum(alpha)
    return math.factorial(n - 1) // (math.prod(alpha) * aut_size(alpha))


def power_sum(alpha: Partition, i: int) -> int:
    if i < 1:
        raise DomainError(f"power sum index must be >= 1, got {i}")
    return sum(a**i for a in alpha)


def q_value(alpha: Partition, i: int) -> int:
    """``p_i + p_1 - 2``."""
    return power_sum(alpha, i) + power_sum(alpha, 1) - 2


def qhat_value(alpha: Partition, i: int) -> int:
    """``p_i - 1``."""
    return power_sum(alpha, i) - 1


class Permutation(tuple):
    """A permutation of ``{1..n}`` given by its image list."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> Permutation:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(range(1, n + 1))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        if a == b or not (1 <= a <= n and 1 <= b <= n):
            raise DomainError(f"bad transposition ({a} {b}) on {n} points")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls._trusted(images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                images[x - 1] = y
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return perm_compose(self, other)
        return NotImplemented

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation._trusted(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * (len(self) + 1)
        out = []
        for start in range(1, len(self) + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation{body}[n={len(self)}]"


def cycle_type(pi: Permutation) -> Partition:
    n = len(pi)
    seen = bytearray(n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            x = pi[x - 1]
        lengths.append(length)
    return Partition(lengths)


def perm_compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``x -> sigma(tau(x))``."""
    if len(sigma) != len(tau):
        raise DomainError(f"cannot compose permutations of sizes {len(sigma)} and {len(tau)}")
    return Permutation._trusted(sigma[t - 1] for t in tau)


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(images)


@lru_cache(maxsize=None)
def permutations_by_class(n: int) -> dict[Partition, tuple[Permutation, ...]]:
    """Every permutation of ``[n]`` grouped by cycle type."""
    groups: dict[Partition, list[Permutation]] = {alpha: [] for alpha in partitions_of(n)}
    for p in all_permutations(n):
        groups[cycle_type(p)].append(p)
    return {alpha: tuple(ps) for alpha, ps in groups.items()}


def perm_rank(images: Iterable[int]) -> int:
    """Lehmer-code rank in ``0 .. n!-1``; accepts 0- or 1-based images alike."""
    images = list(images)
    n = len(images)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
        rank = rank * (n - i) + smaller
    return rank


def perm_unrank(rank: int, n: int) -> Permutation:
    digits = []
    for radix in range(1, n + 1):
        digits.append(rank % radix)
        rank //= radix
    digits.reverse()
    pool = list(range(1, n + 1))
    return Permutation._trusted(pool.pop(d) for d in digits)
