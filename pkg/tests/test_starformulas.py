import math
import random
from fractions import Fraction as F

import pytest

from starfact.combinatorics import Partition, partitions_of, q_value
from starfact.errors import DomainError
from starfact.exactmath import ps_coeff, ps_exp, ps_pow_int, PowerSeries
from starfact.starformulas import (
    XiTable,
    a_from_b_corollary1,
    a_from_b_corollary2,
    double_hurwitz_H,
    genus_poly_Q,
    genus_poly_Q_series,
    genus_poly_Qhat,
    hurwitz_count,
    hurwitz_number_b,
    q_monomials,
    star_count,
    star_number_a,
    xi_coefficients,
    xi_power_bracket,
    xi_series,
)

P = Partition

# Q_g in the q-monomial basis as printed for g <= 5; keys are beta with
# q_{2 beta} the monomial.
PAPER_Q = {
    0: {(): F(1)},
    1: {(1,): F(1, 24)},
    2: {(2,): F(-2, 5760), (1, 1): F(5, 5760)},
    3: {
        (3,): F(16, 2**3 * math.factorial(9)),
        (2, 1): F(-42, 2**3 * math.factorial(9)),
        (1, 1, 1): F(35, 2**3 * math.factorial(9)),
    },
    4: {
        (4,): F(-144, 3 * 2**7 * math.factorial(10)),
        (3, 1): F(320, 3 * 2**7 * math.factorial(10)),
        (2, 2): F(84, 3 * 2**7 * math.factorial(10)),
        (2, 1, 1): F(-420, 3 * 2**7 * math.factorial(10)),
        (1, 1, 1, 1): F(175, 3 * 2**7 * math.factorial(10)),
    },
    5: {
        (5,): F(768, 3 * 2**8 * math.factorial(12)),
        (4, 1): F(-1584, 3 * 2**8 * math.factorial(12)),
        (3, 2): F(-704, 3 * 2**8 * math.factorial(12)),
        (3, 1, 1): F(1760, 3 * 2**8 * math.factorial(12)),
        (2, 2, 1): F(924, 3 * 2**8 * math.factorial(12)),
        (2, 1, 1, 1): F(-1540, 3 * 2**8 * math.factorial(12)),
        (1, 1, 1, 1, 1): F(385, 3 * 2**8 * math.factorial(12)),
    },
}


@pytest.mark.parametrize("g", range(6))
def test_q_table_golden(g):
    got = {tuple(beta): c for beta, c in q_monomials(g).items()}
    assert got == PAPER_Q[g]


def test_xi_series_coefficients():
    xi = xi_series(10)
    assert xi.coeffs[:5] == (1, 0, F(1, 24), 0, F(1, 1920))
    for k in range(6):
        assert xi.coeffs[2 * k] == F(1, 4**k * math.factorial(2 * k + 1))
        if 2 * k + 1 <= 10:
            assert xi.coeffs[2 * k + 1] == 0


def test_xi_coefficients():
    t = xi_coefficients(3)
    assert t.xi2j[1:] == (F(1, 24), F(-1, 2880), F(1, 181440))
    # exp of the log coefficients rebuilds xi
    log_series = [F(0)] * 13
    t6 = xi_coefficients(6)
    for j in range(1, 7):
        log_series[2 * j] = t6.xi2j[j]
    assert ps_exp(PowerSeries(log_series)) == xi_series(12)


def test_xi_coefficients_bernoulli():
    # log(sinh(y)/y) = sum B_{2j} (2y)^{2j} / (2j (2j)!), with y = x/2
    from sympy import bernoulli

    t = xi_coefficients(8)
    for j in range(1, 9):
        b = F(str(bernoulli(2 * j)))
        assert t.xi2j[j] == b / (2 * j * math.factorial(2 * j))


def test_genus_poly_examples():
    assert genus_poly_Q(P([5, 2]), 0) == 1
    assert genus_poly_Q(P([2]), 1) == F(1, 6)
    # q_4 = 16, q_2 = 4: (-2*16 + 5*16) / 5760
    assert genus_poly_Q(P([2]), 2) == F(48, 5760) == F(1, 120)


def test_short_table_rejected():
    with pytest.raises(DomainError):
        genus_poly_Q(P([2]), 3, xi_coefficients(2))
    with pytest.raises(DomainError):
        XiTable(2, (F(0),))


def test_genus_poly_series_examples():
    assert genus_poly_Q_series(P([4, 1]), 0) == 1
    for g in range(1, 5):
        assert genus_poly_Q_series(P([1]), g) == 0
    assert genus_poly_Q_series(P([2]), 1) == F(1, 6)


@pytest.mark.parametrize("n", range(1, 9))
def test_dual_path_Q(n):
    table = xi_coefficients(5)
    for alpha in partitions_of(n):
        for g in range(6):
            assert genus_poly_Q(alpha, g, table) == genus_poly_Q_series(alpha, g)


def test_star_number_examples():
    for n in range(1, 9):
        assert star_number_a(P([n]), 0) == 1
        assert star_number_a(P([1] * n), 0) == F(math.factorial(2 * n - 2), math.factorial(n))
    assert star_number_a(P([2]), 1) == 1
    assert star_number_a(P([3, 2]), 0) == 6
    with pytest.raises(DomainError):
        star_number_a(P(), 0)


def test_star_count_lattice():
    assert star_count(P([3]), 1) == 0
    assert star_count(P([3]), 3) == 0
    assert star_count(P([3]), 2) == 1
    assert star_count(P([2]), 3) == star_number_a(P([2]), 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_integrality(n):
    for alpha in partitions_of(n):
        for g in range(5):
            for value in (star_number_a(alpha, g), hurwitz_number_b(alpha, g)):
                assert value.denominator == 1 and value >= 0


@pytest.mark.parametrize("n", range(1, 10))
def test_genus_zero_closed_form(n):
    for alpha in partitions_of(n):
        m = alpha.length
        assert star_number_a(alpha, 0) == F(math.factorial(n + m - 2) * alpha.product(), math.factorial(n))


def test_symmetry_under_shuffles():
    rng = random.Random(11)
    for _ in range(40):
        parts = [rng.randint(1, 5) for _ in range(rng.randint(1, 4))]
        shuffled = parts[:]
        rng.shuffle(shuffled)
        g = rng.randint(0, 3)
        assert star_number_a(shuffled, g) == star_number_a(parts, g)
        assert hurwitz_number_b(shuffled, g) == hurwitz_number_b(parts, g)


def test_hurwitz_examples():
    for n in range(1, 7):
        assert hurwitz_number_b(P([n]), 0) == 1
        assert double_hurwitz_H(P([n]), 0) == F(1, n)
    assert hurwitz_number_b(P([1, 1]), 0) == 1
    assert double_hurwitz_H(P([1, 1]), 0) == 1
    assert double_hurwitz_H(P([1]), 0) == 1
    # only (12)(12)(12): 2! * 2^1 * 2 * (3/24)
    assert hurwitz_number_b(P([2]), 1) == 1
    assert hurwitz_count(P([2]), 2) == 1
    assert hurwitz_count(P([2]), 1) == 0


def test_xi_power_bracket_examples():
    assert xi_power_bracket(1, 0) == 1
    assert xi_power_bracket(2, 1) == F(1, 4)
    for n in range(1, 9):
        assert xi_power_bracket(n, 0) == math.factorial(n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_xi_power_bracket_vs_series(n):
    power = ps_pow_int(xi_series(8), n - 1)
    for h in range(5):
        assert xi_power_bracket(n, h) / math.factorial(n - 1 + 2 * h) == ps_coeff(power, 2 * h)


def test_corollary_examples():
    assert a_from_b_corollary1(P([1]), 0) == 1
    assert a_from_b_corollary1(P([2]), 0) == 1
    assert a_from_b_corollary1(P([2, 1]), 1) == star_number_a(P([2, 1]), 1)
    assert a_from_b_corollary2(P([2]), 1) == 1
    assert a_from_b_corollary2(P([3]), 2) == star_number_a(P([3]), 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_corollaries(n):
    for alpha in partitions_of(n):
        for g in range(4):
            a = star_number_a(alpha, g)
            assert a_from_b_corollary1(alpha, g) == a
            assert a_from_b_corollary2(alpha, g) == a


def test_corollary2_genus_zero_reduction():
    for alpha in partitions_of(5):
        m = alpha.length
        assert a_from_b_corollary2(alpha, 0) == F(math.factorial(5 + m - 2) * alpha.product(), math.factorial(5))


def test_qhat_relation():
    # Q_g(alpha) = Qhat_g(alpha ∪ 1^{n-1})
    for alpha in partitions_of(4):
        padded = alpha.union(1, 1, 1)
        for g in range(4):
            assert genus_poly_Q(alpha, g) == genus_poly_Qhat(padded, g)
    assert q_value(P([2, 1, 1, 1]), 2) == 10
