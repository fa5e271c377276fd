"""Star factorization counts with the pivot on a marked cycle.

``c_g(i, alpha)`` counts transitive factorizations, into
``n + k - 1 + 2g`` star transpositions, of a fixed permutation whose
pivot lies on an ``i``-cycle and whose other ``k`` cycles have lengths
``alpha``.  Two independent routes are provided: the join-cut recurrence
(:func:`c_dp`) and coefficient extraction from the product form of the
generating series (:func:`c_series`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import EMPTY, Partition
from .errors import DomainError
from .exactmath import ps_coeff, ps_mul, ps_pow_int
from .starformulas import star_number_a, xi_series


@dataclass(frozen=True)
class PivotCountKey:
    i: int
    alpha: Partition
    g: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Partition(self.alpha))
        if self.i < 1 or self.g < 0:
            raise DomainError(f"invalid key: i={self.i}, g={self.g}")

    @property
    def n(self) -> int:
        return self.i + self.alpha.n

    @property
    def r(self) -> int:
        return self.n + self.alpha.length - 1 + 2 * self.g


def _key(key, alpha=None, g=None) -> PivotCountKey:
    if isinstance(key, PivotCountKey):
        return key
    return PivotCountKey(key, EMPTY if alpha is None else alpha, 0 if g is None else g)


def c_dp(key, alpha=None, g=None) -> Fraction:
    """Join-cut recurrence, memoized.  Accepts a key or ``(i, alpha, g)``."""
    k = _key(key, alpha, g)
    return Fraction(_c(k.i, k.alpha, k.g))


@lru_cache(maxsize=None)
def _c(i: int, alpha: Partition, g: int) -> int:
    if i < 1 or g < 0:
        return 0
    if i == 1 and g == 0 and not alpha:
        return 1
    # The leftmost factor is new (pivot cycle shrinks), cuts the pivot cycle
    # away from a part, or joins back a piece of the pivot cycle.
    total = _c(i - 1, alpha, g)
    for part in set(alpha):
        total += alpha.count(part) * part * _c(i + part, alpha.remove(part), g)
    if g > 0:
        for m in range(1, i):
            total += _c(i - m, alpha.union(m), g - 1)
    return total


def clear_cache() -> None:
    _c.cache_clear()


def c_series(key, alpha=None, g=None) -> Fraction:
    """``(r!/n!) * prod(alpha) * i * [x^{2g}] xi(i x) xi(x)^{n-2} prod_j xi(alpha_j x)``."""
    k = _key(key, alpha, g)
    order = 2 * k.g
    xi = xi_series(order)
    series = ps_mul(xi.scale(k.i), ps_pow_int(xi, k.n - 2))
    for part in k.alpha:
        series = ps_mul(series, xi.scale(part))
    prefactor = Fraction(math.factorial(k.r), math.factorial(k.n)) * k.alpha.product() * k.i
    return prefactor * ps_coeff(series, order)


def c_to_a(key, alpha=None, g=None) -> tuple[Partition, int, Fraction]:
    """Rename ``alpha ∪ i`` as the full cycle type; checks the value against ``a_g``."""
    k = _key(key, alpha, g)
    full = k.alpha.union(k.i)
    value = c_dp(k)
    expected = star_number_a(full, k.g)
    if value != expected:
        raise AssertionError(f"c_{k.g}({k.i}, {tuple(k.alpha)}) = {value} but a_{k.g}{tuple(full)} = {expected}")
    return full, k.g, value


def keys_up_to(nmax: int, gmax: int):
    """Every key with ``i + |alpha| <= nmax`` and ``g <= gmax``."""
    from .combinatorics import partitions_of

    for n in range(1, nmax + 1):
        for i in range(1, n + 1):
            for alpha in partitions_of(n - i):
                for g in range(gmax + 1):
                    yield PivotCountKey(i, alpha, g)
