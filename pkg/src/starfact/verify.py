"""Cross-method verification suites driven by ``starfact verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import joincut, oracle
from .combinatorics import class_size, format_partition, partitions_of
from .groupalgebra import hurwitz_product, is_central, resolve_classes, transitive_power
from .starformulas import (
    a_from_b_corollary1,
    a_from_b_corollary2,
    hurwitz_count,
    star_count,
    star_number_a,
)

SUITES = ("centrality", "oracle", "corollaries", "joincut")


@dataclass
class Check:
    name: str
    inputs: dict
    expected: object
    got: object
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.expected == self.got


def _fmt(values):
    if isinstance(values, (list, tuple)):
        return [str(v) for v in values]
    return str(values)


def centrality(nmax: int, rmax: int, **_) -> list[Check]:
    checks = []
    for n in range(1, nmax + 1):
        for r in range(rmax + 1):
            elem = transitive_power(n, r)
            inputs = {"n": n, "r": r}
            central = is_central(elem, check_commutation=True)
            checks.append(Check("transitive_power is central", inputs, True, central))
            if not central:
                continue
            resolved = resolve_classes(elem)
            for alpha in partitions_of(n):
                checks.append(Check(
                    "class coefficient = star_count",
                    {**inputs, "alpha": format_partition(alpha)},
                    _fmt(star_count(alpha, r)),
                    _fmt(resolved[alpha]),
                ))
    return checks


def oracle_suite(nmax: int, rmax: int, budget=None, pivot="n", **_) -> list[Check]:
    checks = []
    for n in range(1, nmax + 1):
        for r in range(rmax + 1):
            census = oracle.census_star_words(n, r, budget=budget, pivot=pivot)
            inputs = {"n": n, "r": r, "pivot": pivot}
            checks.append(Check("star census uniform on classes", inputs, True, census.is_uniform()))
            total = sum(c.min * class_size(alpha) for alpha, c in census.counts.items())
            checks.append(Check(
                "transitive word total = inclusion-exclusion",
                inputs, oracle.inclusion_exclusion_total(n, r), total,
            ))
            for alpha, c in census.counts.items():
                checks.append(Check(
                    "star census = star_count",
                    {**inputs, "alpha": format_partition(alpha)},
                    _fmt(star_count(alpha, r)),
                    _fmt(c.count),
                ))
    for n in range(1, min(nmax, 4) + 1):
        for r in range(min(rmax, 5) + 1):
            census = oracle.census_hurwitz_words(n, r, budget=budget)
            for alpha, c in census.counts.items():
                checks.append(Check(
                    "hurwitz census = b_g",
                    {"n": n, "r": r, "alpha": format_partition(alpha)},
                    _fmt(hurwitz_count(alpha, r)),
                    _fmt(c.count),
                ))
    return checks


def corollaries(nmax: int, gmax: int, **_) -> list[Check]:
    checks = []
    for n in range(1, nmax + 1):
        for alpha in partitions_of(n):
            for g in range(gmax + 1):
                a = star_number_a(alpha, g)
                checks.append(Check(
                    "corollary bridges = a_g",
                    {"alpha": format_partition(alpha), "g": g},
                    _fmt([a, a]),
                    _fmt([a_from_b_corollary1(alpha, g), a_from_b_corollary2(alpha, g)]),
                ))
    return checks


def hurwitz_algebra(nmax: int, rmax: int, **_) -> list[Check]:
    checks = []
    for n in range(1, nmax + 1):
        for r in range(rmax + 1):
            resolved = resolve_classes(hurwitz_product(n, r))
            for alpha in partitions_of(n):
                checks.append(Check(
                    "class-sum product = b_g",
                    {"n": n, "r": r, "alpha": format_partition(alpha)},
                    _fmt(hurwitz_count(alpha, r)),
                    _fmt(resolved[alpha]),
                ))
    return checks


def joincut_suite(nmax: int, gmax: int, **_) -> list[Check]:
    checks = []
    for key in joincut.keys_up_to(nmax, gmax):
        full = key.alpha.union(key.i)
        checks.append(Check(
            "c_dp = c_series = a_g",
            {"i": key.i, "alpha": format_partition(key.alpha), "g": key.g},
            _fmt([star_number_a(full, key.g)] * 2),
            _fmt([joincut.c_dp(key), joincut.c_series(key)]),
        ))
    return checks


def run_suite(suite: str, nmax: int, rmax: int, gmax: int, budget=None, pivot="n") -> list[Check]:
    params = dict(nmax=nmax, rmax=rmax, gmax=gmax, budget=budget, pivot=pivot)
    if suite == "centrality":
        return centrality(**params) + hurwitz_algebra(**params)
    if suite == "oracle":
        return oracle_suite(**params)
    if suite == "corollaries":
        return corollaries(**params)
    if suite == "joincut":
        return joincut_suite(**params)
    if suite == "all":
        return [c for s in SUITES for c in run_suite(s, nmax, rmax, gmax, budget, pivot)]
    raise ValueError(f"unknown suite {suite!r}")
