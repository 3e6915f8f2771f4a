import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import convex_sets
from convexreps.convex import (
    EmptySetError,
    NotConvexError,
    NotSortedError,
    convexity_margin,
    dilate_to_integers,
    from_gap_sequence,
    gaps,
    load_set,
    scale,
    translate,
    validate_convex,
)
from convexreps.numeric import RationalFormatError


def els(A):
    return list(A.elements)


@pytest.mark.parametrize("xs", [[0, 1, 3, 6], [0, 4, 9, 15, 24, 39], [5], [0, 7], [F(1, 3), F(1, 2)]])
def test_valid(xs):
    assert els(validate_convex(xs)) == [F(x) for x in xs]


def test_arithmetic_progression_not_convex():
    with pytest.raises(NotConvexError) as exc:
        validate_convex([0, 1, 2])
    assert exc.value.index == 2


def test_not_sorted_index():
    with pytest.raises(NotSortedError) as exc:
        validate_convex([0, 1, 3, 3, 10])
    assert exc.value.index == 3


def test_first_convexity_failure_reported():
    # gaps 1, 3, 2, 2: fails at a_3 first
    with pytest.raises(NotConvexError) as exc:
        validate_convex([0, 1, 4, 6, 8])
    assert exc.value.index == 3


def test_empty():
    with pytest.raises(EmptySetError):
        validate_convex([])


@pytest.mark.parametrize(
    "xs, expected",
    [([0, 1, 3, 6], [1, 2, 3]), ([0, 2, 5, 10], [2, 3, 5]), ([0, 1], [1])],
)
def test_gaps(xs, expected):
    assert gaps(validate_convex(xs)) == expected


def test_gaps_needs_two():
    with pytest.raises(ValueError):
        gaps(validate_convex([1]))


@pytest.mark.parametrize(
    "xs, expected, L",
    [
        ([0, 1, F(5, 2), 5], [0, 2, 5, 10], 2),
        ([0, 1, 3, 6], [0, 1, 3, 6], 1),
        ([0, 1, F(9, 4), F(15, 4), 6, F(39, 4)], [0, 4, 9, 15, 24, 39], 4),
    ],
)
def test_dilate(xs, expected, L):
    B, scale_factor = dilate_to_integers(validate_convex(xs))
    assert els(B) == expected and scale_factor == L
    assert B.is_integral()


def test_translate_and_scale_examples():
    A = validate_convex([0, 1, 3])
    assert els(translate(A, 5)) == [5, 6, 8]
    assert els(scale(A, 2)) == [0, 2, 6]
    with pytest.raises(ValueError):
        scale(A, 0)
    with pytest.raises(ValueError):
        scale(A, F(-1, 2))


@pytest.mark.parametrize(
    "g, expected",
    [((1, 2, 3), [0, 1, 3, 6]), ((4, 5, 6, 9, 15), [0, 4, 9, 15, 24, 39]), ((2,), [0, 2])],
)
def test_from_gap_sequence(g, expected):
    assert els(from_gap_sequence(g)) == expected


@pytest.mark.parametrize("g", [(0, 1), (2, 2), (3, 1)])
def test_bad_gap_sequence(g):
    with pytest.raises(ValueError):
        from_gap_sequence(g)


@given(st.lists(st.integers(1, 40), min_size=1, max_size=12, unique=True))
def test_gap_round_trip(g):
    g = tuple(sorted(g))
    assert tuple(gaps(from_gap_sequence(g))) == g
    validate_convex(from_gap_sequence(g).elements)


@given(convex_sets(min_size=2))
def test_shifted_differences_increase(A):
    xs = els(A)
    n = len(xs)
    for k in range(1, n):
        seq = [xs[j + k] - xs[j] for j in range(n - k)]
        assert all(u < v for u, v in zip(seq, seq[1:]))
    for j in range(n):
        seq = [xs[j + k] - xs[j] for k in range(1, n - j)]
        assert all(u < v for u, v in zip(seq, seq[1:]))


@given(convex_sets(), st.fractions(max_denominator=9), st.fractions(min_value=F(1, 9), max_value=9, max_denominator=9))
def test_affine_maps_preserve_convexity(A, c, lam):
    validate_convex(translate(A, c).elements)
    B = scale(A, lam)
    validate_convex(B.elements)
    validate_convex(dilate_to_integers(A)[0].elements)
    if len(A) >= 2:
        assert gaps(B) == [lam * x for x in gaps(A)]
        assert gaps(translate(A, c)) == gaps(A)


@given(convex_sets(min_size=3))
def test_margins_positive(A):
    assert all(convexity_margin(A, i) > 0 for i in range(2, len(A)))


def test_set_file_round_trip(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"elements": ["0", "4", "9", "15", "24", "39"]}))
    assert els(load_set(p)) == [0, 4, 9, 15, 24, 39]
    A = validate_convex([0, F(1, 2), F(3, 2)])
    assert A.to_json() == {"elements": ["0", "1/2", "3/2"]}


def test_set_file_rejects_non_canonical(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"elements": ["0", "2/4", "3"]}))
    with pytest.raises(RationalFormatError, match="non-canonical"):
        load_set(p)


def test_set_file_shape_errors(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(["0", "1"]))
    with pytest.raises(ValueError):
        load_set(p)
    p.write_text(json.dumps({"elements": [0, 1]}))
    with pytest.raises(ValueError):
        load_set(p)
