from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import convex_sets, integer_convex_sets
from convexreps.constructions import construct
from convexreps.convex import dilate_to_integers, validate_convex
from convexreps.stats import diff_stats, max_rep_diff, max_rep_sum, rep_diff, rep_sum, rich_count, sum_histogram
from oracles import pair_count_diff, pair_count_sum, positive_histogram, quadruple_energy

S = validate_convex([0, 2, 5, 10])


def test_rep_diff_examples():
    assert rep_diff(S, 5) == 2
    assert rep_diff(S, -5) == 2
    assert rep_diff(S, 0) == 4
    assert rep_diff(S, 4) == 0


def test_rep_sum_examples():
    assert rep_sum(S, 10) == 3
    assert rep_sum(validate_convex([0, 1]), 1) == 2
    assert rep_sum(S, 21) == 0


def test_diff_stats_example():
    st_ = diff_stats(S)
    assert st_.energy == 32
    assert st_.rep_counts == {2: 1, 3: 1, 5: 2, 8: 1, 10: 1}
    assert list(st_.rep_counts) == sorted(st_.rep_counts)
    assert st_.diff_set_size == 11


def test_singleton():
    st_ = diff_stats(validate_convex([7]))
    assert (st_.energy, st_.diff_set_size, st_.rep_counts) == (1, 1, {})
    with pytest.raises(ValueError):
        max_rep_diff(validate_convex([7]))


def test_construction_histogram():
    B, _ = dilate_to_integers(construct(3, F(1, 4)).set)
    assert diff_stats(B).rep_counts[15] == 3
    assert rich_count(construct(3, F(1, 4)).set, 3) == 1


@pytest.mark.parametrize(
    "xs, expected", [([0, 1, 3, 6], (3, 2)), ([0, 1], (1, 1)), ([0, 1, 3, 6, 10], (3, 2))]
)
def test_max_rep_diff_examples(xs, expected):
    assert max_rep_diff(validate_convex(xs)) == expected


@pytest.mark.parametrize("m", range(1, 25))
def test_max_rep_diff_on_construction(m):
    res = construct(m)
    assert max_rep_diff(res.set) == (res.d, m)


def test_max_rep_sum_example():
    assert max_rep_sum(S) == (10, 3)


def test_rich_count_one_is_all_positive_differences():
    st_ = diff_stats(S)
    assert rich_count(S, 1) == len(st_.rep_counts) == (st_.diff_set_size - 1) // 2
    with pytest.raises(ValueError):
        rich_count(S, 0)


@given(convex_sets(min_size=1, max_size=12))
def test_histogram_matches_pair_scan(A):
    xs = list(A.elements)
    st_ = diff_stats(A)
    assert st_.rep_counts == positive_histogram(xs)
    for d, c in st_.rep_counts.items():
        assert rep_diff(A, d) == c
        assert rep_diff(A, -d) == c
    n = len(xs)
    assert sum(st_.rep_counts.values()) == n * (n - 1) // 2
    assert st_.diff_set_size == 2 * len(st_.rep_counts) + 1


@settings(max_examples=60)
@given(integer_convex_sets(min_size=1, max_size=10))
def test_energy_identity(A):
    xs = list(A.elements)
    assert diff_stats(A).energy == quadruple_energy(xs)


@settings(max_examples=60)
@given(integer_convex_sets(min_size=1, max_size=10), st.integers(-2, 80))
def test_rep_sum_matches_pairs(A, c):
    xs = list(A.elements)
    assert rep_sum(A, c) == pair_count_sum(xs, c)
    hist = sum_histogram(A)
    assert hist.get(F(c), 0) == pair_count_sum(xs, c)


@given(convex_sets(min_size=2, max_size=12))
def test_max_rep_bounded(A):
    assert max_rep_diff(A)[1] <= len(A) // 2
