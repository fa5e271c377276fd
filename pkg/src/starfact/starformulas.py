"""Closed-form counting formulas.

``xi(x) = 2 sinh(x/2) / x``; the genus polynomials ``Q_g`` and ``Qhat_g``
are built from the coefficients ``xi_{2j}`` of ``log xi(x)`` and from the
power-sum statistics ``q_i = p_i + p_1 - 2`` and ``qhat_i = p_i - 1``.
All results are exact :class:`~fractions.Fraction` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .combinatorics import (
    Partition,
    aut_size,
    partitions_of,
    q_value,
    qhat_value,
)
from .errors import DomainError
from .exactmath import PowerSeries, ps_coeff, ps_log, ps_mul, ps_pow_int


@dataclass(frozen=True)
class XiTable:
    """``xi2j[j]`` is ``xi_{2j}`` for ``j = 1..order``; ``xi2j[0]`` is 0."""

    order: int
    xi2j: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.xi2j) != self.order + 1:
            raise DomainError("xi table length does not match its order")


@dataclass(frozen=True)
class GenusPolynomialValue:
    alpha: Partition
    g: int
    value: Fraction


def xi_series(order: int) -> PowerSeries:
    """Series of ``xi(x)`` through degree ``order``: ``[x^{2k}] = 1 / (4^k (2k+1)!)``."""
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        coeffs[2 * k] = Fraction(1, 4**k * math.factorial(2 * k + 1))
    return PowerSeries(coeffs)


@lru_cache(maxsize=None)
def xi_coefficients(g_max: int) -> XiTable:
    if g_max < 0:
        raise DomainError(f"g_max must be >= 0, got {g_max}")
    log_xi = ps_log(xi_series(2 * g_max))
    return XiTable(g_max, tuple(log_xi.coeffs[0::2]))


def _table_for(g: int, table: XiTable | None) -> XiTable:
    if table is None:
        return xi_coefficients(g)
    if table.order < g:
        raise DomainError(f"xi table of order {table.order} cannot evaluate genus {g}")
    return table


def q_monomials(g: int, table: XiTable | None = None) -> dict[Partition, Fraction]:
    """Coefficients of ``Q_g`` in the ``q``-monomial basis.

    The key ``beta ⊢ g`` stands for the monomial ``q_{2 beta_1} q_{2 beta_2} ...``.
    """
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    table = _table_for(g, table)
    out = {}
    for beta in partitions_of(g):
        coeff = Fraction(1, aut_size(beta))
        for part in beta:
            coeff *= table.xi2j[part]
        out[beta] = coeff
    return out


def _genus_poly(stat: Callable[[int], int], g: int, table: XiTable | None) -> Fraction:
    total = Fraction(0)
    for beta, coeff in q_monomials(g, table).items():
        total += coeff * math.prod(stat(2 * part) for part in beta)
    return total


def genus_poly_Q(alpha: Partition, g: int, table: XiTable | None = None) -> Fraction:
    return _genus_poly(lambda i: q_value(alpha, i), g, table)


def genus_poly_Qhat(alpha: Partition, g: int, table: XiTable | None = None) -> Fraction:
    return _genus_poly(lambda i: qhat_value(alpha, i), g, table)


def genus_poly_Q_series(alpha: Partition, g: int) -> Fraction:
    """``Q_g(alpha)`` as ``[x^{2g}] xi(x)^{n-2} prod_l xi(alpha_l x)``."""
    alpha = Partition(alpha)
    if not alpha:
        raise DomainError("genus polynomial needs a nonempty partition")
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    order = 2 * g
    xi = xi_series(order)
    series = ps_pow_int(xi, alpha.n - 2)
    for part in alpha:
        series = ps_mul(series, xi.scale(part))
    return ps_coeff(series, order)


def genus_value(alpha: Partition, g: int) -> GenusPolynomialValue:
    alpha = Partition(alpha)
    return GenusPolynomialValue(alpha, g, genus_poly_Q(alpha, g))


def _nonempty(alpha) -> Partition:
    alpha = Partition(alpha)
    if not alpha:
        raise DomainError("the empty partition has no star factorization number")
    return alpha


def star_number_a(alpha: Partition, g: int) -> Fraction:
    """Transitive factorizations of a fixed permutation of cycle type ``alpha``
    into ``n + m - 2 + 2g`` star transpositions."""
    alpha = _nonempty(alpha)
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    n, m = alpha.n, alpha.length
    return Fraction(math.factorial(n + m - 2 + 2 * g) * alpha.product(), math.factorial(n)) * genus_poly_Q(alpha, g)


def star_count(alpha: Partition, r: int) -> Fraction:
    """Star factorization count by word length; zero off the ``r = n + m - 2 + 2g`` lattice."""
    alpha = _nonempty(alpha)
    excess = r - (alpha.n + alpha.length - 2)
    if r < 0 or excess < 0 or excess % 2:
        return Fraction(0)
    return star_number_a(alpha, excess // 2)


def hurwitz_number_b(alpha: Partition, g: int) -> Fraction:
    """``alpha_1 ... alpha_m H^g_{(n), alpha}``: factorizations into ``m - 1 + 2g``
    transpositions followed by an ``n``-cycle."""
    alpha = _nonempty(alpha)
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    n, m = alpha.n, alpha.length
    return (
        math.factorial(m - 1 + 2 * g)
        * Fraction(n) ** (m - 2 + 2 * g)
        * alpha.product()
        * genus_poly_Qhat(alpha, g)
    )


def hurwitz_count(alpha: Partition, r: int) -> Fraction:
    """``b_g(alpha)`` with ``g`` determined by ``r = m - 1 + 2g``; zero off-lattice."""
    alpha = _nonempty(alpha)
    excess = r - (alpha.length - 1)
    if excess < 0 or excess % 2:
        return Fraction(0)
    return hurwitz_number_b(alpha, excess // 2)


def double_hurwitz_H(alpha: Partition, g: int) -> Fraction:
    alpha = _nonempty(alpha)
    return hurwitz_number_b(alpha, g) / alpha.product()


def xi_power_bracket(n: int, h: int) -> Fraction:
    """``sum_j C(n-1, j) (-1)^j ((n-1)/2 - j)^{n-1+2h}``.

    Divided by ``(n-1+2h)!`` this is ``[x^{2h}] xi(x)^{n-1}``.
    """
    if n < 1 or h < 0:
        raise DomainError(f"need n >= 1 and h >= 0, got n={n}, h={h}")
    e = n - 1 + 2 * h
    half = Fraction(n - 1, 2)
    # Fraction(0) ** 0 == 1, which covers n = 1, h = 0.
    return sum(
        (math.comb(n - 1, j) * (-1) ** j * (half - j) ** e for j in range(n)),
        Fraction(0),
    )


def a_from_b_corollary1(alpha: Partition, g: int) -> Fraction:
    """``a_g(alpha)`` from ``b_g(alpha ∪ 1^{n-1})`` in the symmetric group on ``2n - 1`` points."""
    alpha = _nonempty(alpha)
    n, m = alpha.n, alpha.length
    padded = alpha.union(*([1] * (n - 1)))
    scale = math.factorial(n) * Fraction(2 * n - 1) ** (n + m - 3 + 2 * g)
    return hurwitz_number_b(padded, g) / scale


def a_from_b_corollary2(alpha: Partition, g: int) -> Fraction:
    """``a_g(alpha)`` as a combination of ``b_0(alpha) .. b_g(alpha)``."""
    alpha = _nonempty(alpha)
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    n, m = alpha.n, alpha.length
    total = Fraction(0)
    for h in range(g + 1):
        b = hurwitz_number_b(alpha, g - h)
        total += (
            b
            / Fraction(n) ** (m - 2 + 2 * g - 2 * h)
            * math.comb(n + m - 2 + 2 * g, n - 1 + 2 * h)
            * xi_power_bracket(n, h)
        )
    return total / math.factorial(n)
