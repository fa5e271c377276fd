"""Exact rationals and truncated univariate power series.

Rationals are :class:`fractions.Fraction`, which is always normalized
(positive denominator, coprime terms).  A :class:`PowerSeries` stores the
dense coefficient vector ``c_0 .. c_N``; every operation is exact through
degree ``N`` and silently drops higher terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, OrderMismatchError

Rational = Fraction


class PowerSeries:
    """Immutable power series truncated at ``order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise DomainError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise DomainError(f"truncation order must be >= 0, got {order}")
        cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        return cls([value], order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, d: int) -> Fraction:
        return ps_coeff(self, d)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        terms = []
        for d, c in enumerate(self._coeffs):
            if c:
                terms.append(f"{c}" if d == 0 else f"({c})*x^{d}")
        body = " + ".join(terms) or "0"
        return f"PowerSeries({body} + O(x^{self.order + 1}))"

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        _check_orders(self, other)
        return PowerSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        _check_orders(self, other)
        return PowerSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return PowerSeries([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return ps_pow_int(self, k)

    def scale(self, factor) -> PowerSeries:
        """Substitute ``x -> factor * x``: coefficient ``d`` picks up ``factor**d``."""
        f = Fraction(factor)
        return PowerSeries([c * f**d for d, c in enumerate(self._coeffs)])

    def derivative(self) -> PowerSeries:
        """Formal derivative, kept at the same order (top coefficient becomes 0)."""
        cs = [d * c for d, c in enumerate(self._coeffs)][1:]
        return PowerSeries(cs, self.order)


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"truncation orders differ: {a.order} vs {b.order}")


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    ac, bc = a.coeffs, b.coeffs
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return PowerSeries(out)


def ps_inverse(a: PowerSeries) -> PowerSeries:
    a0 = a.coeffs[0]
    if not a0:
        raise DomainError("series with zero constant term is not invertible")
    ac = a.coeffs
    inv0 = 1 / a0
    b = [inv0]
    for k in range(1, a.order + 1):
        s = sum((ac[j] * b[k - j] for j in range(1, k + 1)), Fraction(0))
        b.append(-inv0 * s)
    return PowerSeries(b)


def ps_log(a: PowerSeries) -> PowerSeries:
    """Logarithm of a series with constant term 1.

    Uses ``k L_k = k a_k - sum_{j=1}^{k-1} j L_j a_{k-j}``, which is the
    coefficientwise form of ``L' a = a'``.
    """
    ac = a.coeffs
    if ac[0] != 1:
        raise DomainError(f"log needs constant term 1, got {ac[0]}")
    logc = [Fraction(0)]
    for k in range(1, a.order + 1):
        s = k * ac[k]
        for j in range(1, k):
            s -= j * logc[j] * ac[k - j]
        logc.append(s / k)
    return PowerSeries(logc)


def ps_exp(a: PowerSeries) -> PowerSeries:
    """Exponential of a series with constant term 0, via ``E' = a' E``."""
    ac = a.coeffs
    if ac[0] != 0:
        raise DomainError(f"exp needs constant term 0, got {ac[0]}")
    e = [Fraction(1)]
    for k in range(1, a.order + 1):
        s = Fraction(0)
        for j in range(1, k + 1):
            if ac[j]:
                s += j * ac[j] * e[k - j]
        e.append(s / k)
    return PowerSeries(e)


def ps_pow_int(a: PowerSeries, k: int) -> PowerSeries:
    """``a**k`` for any integer ``k``; negative powers invert first."""
    if k < 0:
        if not a.coeffs[0]:
            raise DomainError("negative power of a series with zero constant term")
        a, k = ps_inverse(a), -k
    result = PowerSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = ps_mul(result, base)
        k >>= 1
        if k:
            base = ps_mul(base, base)
    return result


def ps_coeff(a: PowerSeries, d: int) -> Fraction:
    if not 0 <= d <= a.order:
        raise DomainError(f"degree {d} outside 0..{a.order}")
    return a.coeffs[d]


def ps_product(factors: Sequence[PowerSeries], order: int) -> PowerSeries:
    result = PowerSeries.one(order)
    for f in factors:
        result = ps_mul(result, f)
    return result
