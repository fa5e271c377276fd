"""Star factorization numbers, genus polynomials and double Hurwitz numbers.

Every quantity is computed exactly and, where possible, by several
independent routes: closed formulas (:mod:`starfact.starformulas`), the
join-cut recurrence and generating series (:mod:`starfact.joincut`),
group-algebra arithmetic (:mod:`starfact.groupalgebra`) and brute-force
enumeration (:mod:`starfact.oracle`).
"""

from .combinatorics import Partition, Permutation, parse_partition, partitions_of
from .exactmath import PowerSeries, Rational
from .starformulas import (
    a_from_b_corollary1,
    a_from_b_corollary2,
    double_hurwitz_H,
    genus_poly_Q,
    hurwitz_number_b,
    star_count,
    star_number_a,
)

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Permutation",
    "PowerSeries",
    "Rational",
    "a_from_b_corollary1",
    "a_from_b_corollary2",
    "double_hurwitz_H",
    "genus_poly_Q",
    "hurwitz_number_b",
    "parse_partition",
    "partitions_of",
    "star_count",
    "star_number_a",
]
