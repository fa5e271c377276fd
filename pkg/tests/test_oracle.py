import itertools
from itertools import combinations, product

import pytest

from starfact.combinatorics import Partition, Permutation, class_size, cycle_type
from starfact.errors import DomainError, ResourceLimitError
from starfact.oracle import (
    census_hurwitz_words,
    census_star_words,
    count_star_factorizations,
    default_budget,
    inclusion_exclusion_total,
    star_generators,
    star_words_covering,
    transitivity_check_generic,
    word_product,
)
from starfact.starformulas import hurwitz_count, star_count

P = Partition


def naive_star_counts(n, r, pivot="n"):
    """Word-by-word enumeration with no incremental products or pruning."""
    gens = star_generators(n, pivot)
    counts = {}
    for word in product(gens, repeat=r):
        if star_words_covering(word, n, pivot):
            p = word_product(word, n)
            counts[p] = counts.get(p, 0) + 1
    return counts


def test_census_examples():
    assert census_star_words(2, 1).uniform_counts() == {P([2]): 1, P([1, 1]): 0}
    c = census_star_words(3, 2)
    assert c.uniform_counts() == {P([3]): 1, P([2, 1]): 0, P([1, 1, 1]): 0}
    c = census_star_words(4, 4)
    assert c.counts[P([2, 1, 1])].max == 0
    for alpha, cc in c.counts.items():
        assert cc.uniform and cc.count == star_count(alpha, 4)


def test_census_fields():
    c = census_star_words(3, 4)
    for cc in c.counts.values():
        assert cc.min <= cc.max
        assert cc.uniform == (cc.min == cc.max)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("pivot", ["n", "one"])
def test_kernel_matches_naive_enumeration(n, pivot):
    for r in range(7):
        census = census_star_words(n, r, pivot=pivot)
        naive = naive_star_counts(n, r, pivot)
        for p, count in naive.items():
            assert census.counts[cycle_type(p)].max >= count
            assert count_star_factorizations(p, r, pivot=pivot) == count


def test_count_examples():
    assert count_star_factorizations(Permutation([2, 1]), 3) == 1
    assert count_star_factorizations(Permutation.identity(2), 2) == 1
    assert count_star_factorizations(Permutation.identity(3), 3) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_census_uniform_and_formula(n):
    for r in range(10):
        census = census_star_words(n, r)
        assert census.is_uniform()
        for alpha, cc in census.counts.items():
            assert cc.count == star_count(alpha, r)


@pytest.mark.parametrize("n", range(1, 6))
def test_pivot_choice_irrelevant(n):
    for r in range(8):
        assert census_star_words(n, r, pivot="one").counts == census_star_words(n, r, pivot="n").counts


@pytest.mark.parametrize("n", range(1, 7))
def test_word_total(n):
    for r in range(9):
        census = census_star_words(n, r)
        total = sum(cc.min * class_size(alpha) for alpha, cc in census.counts.items())
        assert total == inclusion_exclusion_total(n, r)


def test_hurwitz_examples():
    assert census_hurwitz_words(2, 0).uniform_counts() == {P([2]): 1, P([1, 1]): 0}
    assert census_hurwitz_words(2, 1).uniform_counts() == {P([2]): 0, P([1, 1]): 1}
    c = census_hurwitz_words(3, 1)
    assert sum(cc.min * class_size(a) for a, cc in c.counts.items()) == 6
    for alpha, cc in c.counts.items():
        assert cc.count == hurwitz_count(alpha, 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_hurwitz_census(n):
    for r in range(6):
        for alpha, cc in census_hurwitz_words(n, r).counts.items():
            assert cc.uniform and cc.count == hurwitz_count(alpha, r)


@pytest.mark.parametrize("n", [2, 3])
def test_hurwitz_cycle_placement(n):
    # placing the n-cycle first instead of last gives the same class counts
    transpositions = [Permutation.transposition(a + 1, b + 1, n) for a, b in combinations(range(n), 2)]
    cycles = [p for p in itertools.permutations(range(1, n + 1)) if cycle_type(Permutation(p)) == P([n])]
    for r in range(4):
        counts = {}
        for rho in cycles:
            for word in product(transpositions, repeat=r):
                prod = Permutation(rho)
                for t in word:
                    prod = prod * t
                counts[prod] = counts.get(prod, 0) + 1
        census = census_hurwitz_words(n, r)
        for alpha, cc in census.counts.items():
            members = [p for p in counts if cycle_type(p) == alpha]
            values = {counts.get(p, 0) for p in members} or {0}
            assert values == {cc.count}


def test_transitivity_examples():
    t12 = Permutation([2, 1])
    assert transitivity_check_generic([t12], 2)
    assert not transitivity_check_generic([Permutation([2, 1, 3])], 3)
    assert transitivity_check_generic([Permutation([2, 1, 3]), Permutation([1, 3, 2])], 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_coverage_criterion_equals_transitivity(n):
    gens = star_generators(n)
    perms = {g: Permutation.transposition(g[0] + 1, g[1] + 1, n) for g in gens}
    max_r = 7 if n <= 4 else 6
    for r in range(max_r + 1):
        for word in product(gens, repeat=r):
            assert star_words_covering(word, n) == transitivity_check_generic([perms[g] for g in word], n)


def test_budget_enforced():
    with pytest.raises(ResourceLimitError) as err:
        census_star_words(5, 9, budget=1000)
    assert err.value.params["words"] == 4**9
    with pytest.raises(ResourceLimitError):
        census_hurwitz_words(4, 5, budget=10)
    with pytest.raises(DomainError):
        census_star_words(0, 1)
    with pytest.raises(DomainError):
        census_star_words(3, 1, pivot="two")


def test_budget_env(monkeypatch):
    monkeypatch.setenv("STARFACT_BUDGET", "50")
    assert default_budget() == 50
    with pytest.raises(ResourceLimitError):
        census_star_words(3, 6)
    monkeypatch.setenv("STARFACT_BUDGET", "lots")
    with pytest.raises(DomainError):
        default_budget()
