"""Exact computation in the group algebra of the symmetric group.

Elements are sparse maps from :class:`Permutation` to ``Fraction``.
Products use the word convention of :mod:`starfact.combinatorics`:
``(s * t)(x) = s(t(x))``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .combinatorics import (
    Partition,
    Permutation,
    partitions_of,
    permutations_by_class,
)
from .errors import CentralityError, DomainError, ResourceLimitError

DEFAULT_MAX_N = 7


class GroupAlgebraElement:
    """Immutable sparse element of Q[S_n]; zero coefficients are never stored."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Permutation, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Permutation, Fraction] = {}
        for perm, coeff in items:
            perm = perm if isinstance(perm, Permutation) else Permutation(perm)
            if len(perm) != n:
                raise DomainError(f"permutation {perm!r} is not on {n} points")
            acc[perm] = acc.get(perm, Fraction(0)) + Fraction(coeff)
        self.n = n
        self._terms = {p: c for p, c in acc.items() if c}

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def identity(cls, n: int) -> GroupAlgebraElement:
        return cls._raw(n, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> GroupAlgebraElement:
        return cls._raw(n, {})

    @classmethod
    def basis(cls, perm: Permutation, coeff=1) -> GroupAlgebraElement:
        return cls(len(perm), {perm: coeff})

    @property
    def terms(self) -> dict[Permutation, Fraction]:
        return dict(self._terms)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{p!r}" for p, c in sorted(self._terms.items()))
        return f"GroupAlgebraElement(n={self.n}, {body or '0'})"

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        _check_sizes(self, other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return GroupAlgebraElement._raw(self.n, out)

    def __neg__(self):
        return GroupAlgebraElement._raw(self.n, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_mul(self, other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return GroupAlgebraElement.zero(self.n)
            return GroupAlgebraElement._raw(self.n, {p: c * other for p, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, r: int):
        return ga_pow(self, r)


@dataclass(frozen=True)
class CentralElement:
    """Coefficients of a central element in the class-sum basis."""

    n: int
    coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    def __getitem__(self, alpha) -> Fraction:
        return self.coeffs.get(Partition(alpha), Fraction(0))

    def nonzero(self) -> dict[Partition, Fraction]:
        return {a: c for a, c in self.coeffs.items() if c}


def _check_sizes(a: GroupAlgebraElement, b: GroupAlgebraElement) -> None:
    if a.n != b.n:
        raise DomainError(f"group algebra elements on {a.n} and {b.n} points")


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    _check_sizes(a, b)
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for s, cs in a._terms.items():
        for t, ct in b._terms.items():
            acc[tuple(s[x - 1] for x in t)] += cs * ct
    return GroupAlgebraElement._raw(
        a.n, {Permutation._trusted(p): c for p, c in acc.items() if c}
    )


def ga_pow(a: GroupAlgebraElement, r: int) -> GroupAlgebraElement:
    if r < 0:
        raise DomainError(f"negative power {r}")
    result = GroupAlgebraElement.identity(a.n)
    for _ in range(r):
        result = ga_mul(result, a)
    return result


def yjm_partial(subset: Iterable[int], n: int) -> GroupAlgebraElement:
    """``sum_{j in subset} (j n)``; the full subset ``1..n-1`` gives the YJM element ``X_n``."""
    subset = sorted(set(subset))
    if any(not 1 <= j <= n - 1 for j in subset):
        raise DomainError(f"subset {subset} not contained in 1..{n - 1}")
    return GroupAlgebraElement._raw(
        n, {Permutation.transposition(j, n, n): Fraction(1) for j in subset}
    )


def yjm(n: int) -> GroupAlgebraElement:
    return yjm_partial(range(1, n), n)


def transitive_power(n: int, r: int, max_n: int = DEFAULT_MAX_N) -> GroupAlgebraElement:
    """Transitive part of ``X_n^r`` by inclusion-exclusion over omitted star generators."""
    if n < 1 or r < 0:
        raise DomainError(f"need n >= 1 and r >= 0, got n={n}, r={r}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the group algebra cap {max_n}", n=n, max_n=max_n)
    ground = range(1, n)
    total = GroupAlgebraElement.zero(n)
    for size in range(n):
        sign = -1 if size % 2 else 1
        for omitted in combinations(ground, size):
            kept = [j for j in ground if j not in omitted]
            term = ga_pow(yjm_partial(kept, n), r)
            total = total + (term if sign > 0 else -term)
    return total


def class_sum(alpha, n: int | None = None) -> GroupAlgebraElement:
    alpha = Partition(alpha)
    n = alpha.n if n is None else n
    if alpha.n != n:
        raise DomainError(f"{tuple(alpha)} is not a partition of {n}")
    return GroupAlgebraElement._raw(n, {p: Fraction(1) for p in permutations_by_class(n)[alpha]})


def _class_witness(a: GroupAlgebraElement):
    for alpha, perms in permutations_by_class(a.n).items():
        first = a.coefficient(perms[0])
        for p in perms[1:]:
            if a.coefficient(p) != first:
                return alpha, (perms[0], p)
    return None


def _commutes_with_generators(a: GroupAlgebraElement) -> bool:
    for i in range(1, a.n):
        s = GroupAlgebraElement.basis(Permutation.transposition(i, i + 1, a.n))
        if ga_mul(a, s) != ga_mul(s, a):
            return False
    return True


def is_central(a: GroupAlgebraElement, check_commutation: bool = False) -> bool:
    """Class-uniformity test; ``check_commutation`` also compares ``a s`` with
    ``s a`` for every adjacent transposition ``s``."""
    uniform = _class_witness(a) is None
    if not check_commutation:
        return uniform
    commutes = _commutes_with_generators(a)
    if uniform != commutes:
        raise AssertionError("class-uniformity and generator commutation disagree")
    return uniform


def resolve_classes(a: GroupAlgebraElement) -> CentralElement:
    found = _class_witness(a)
    if found is not None:
        alpha, (p, q) = found
        raise CentralityError(
            f"coefficients differ on class {tuple(alpha)}: "
            f"{a.coefficient(p)} at {p!r} vs {a.coefficient(q)} at {q!r}",
            witness=(p, q),
        )
    classes = permutations_by_class(a.n)
    return CentralElement(a.n, {alpha: a.coefficient(classes[alpha][0]) for alpha in partitions_of(a.n)})


def hurwitz_product(n: int, r: int, max_n: int = DEFAULT_MAX_N) -> GroupAlgebraElement:
    """``K_{(2, 1^{n-2})}^r K_{(n)}`` computed by repeated convolution."""
    if n < 1 or r < 0:
        raise DomainError(f"need n >= 1 and r >= 0, got n={n}, r={r}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the group algebra cap {max_n}", n=n, max_n=max_n)
    result = class_sum([n])
    if n == 1:
        # no transpositions exist in S_1
        return result if r == 0 else GroupAlgebraElement.zero(1)
    transpositions = class_sum([2] + [1] * (n - 2))
    for _ in range(r):
        result = ga_mul(transpositions, result)
    return result
