from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cigenera.arith import binomial_general
from cigenera.ci import TwistedGenusQuery, normalize
from cigenera.closed import (
    MAX_CODIMENSION,
    ahat_closed,
    ak_closed,
    ak_from_todd,
    chi_K_closed,
    chi_K_fraction,
    subset_sums,
    todd_at_dimension,
    todd_closed,
    todd_recurrence,
)

cis = st.builds(
    lambda n, degrees: normalize(n, degrees),
    st.integers(1, 7),
    st.lists(st.integers(2, 6), max_size=3),
)


def chi(ci, k, N):
    return chi_K_closed(TwistedGenusQuery(ci, k, N))


@pytest.mark.parametrize("degrees, n, expected", [((2, 2), 2, 1), ((4,), 2, 2), ((5,), 3, 0), ((4,), 1, -2)])
def test_todd_examples(X, degrees, n, expected):
    assert todd_closed(X(n, *degrees)) == expected


@pytest.mark.parametrize("d", range(2, 9))
def test_todd_of_plane_curves_is_one_minus_genus(X, d):
    genus = (d - 1) * (d - 2) // 2
    assert todd_closed(X(1, d)) == 1 - genus


@pytest.mark.parametrize("n", range(1, 9))
def test_todd_of_projective_space(X, n):
    assert todd_closed(X(n)) == 1


def test_zero_dimensional_todd_counts_points():
    assert todd_at_dimension(0, (5, 3, 2)) == 30
    assert todd_at_dimension(0, ()) == 1


def test_chi_k_examples(X):
    assert chi(X(2, 2, 2), 1, 1) == 1
    assert chi(X(3, 5), 1, 3) == 0
    assert chi(X(3, 5), 2, 7) == 0
    assert chi(X(2, 6), 1, 2) == binomial_general(4, 3) + binomial_general(4, 3) == 8


def test_chi_k_positive_c1_vanishes_inside(X):
    # c1 = 4 for X4(2), divisible by N = 2 and 4
    ci = X(4, 2)
    for N in (2, 4):
        for k in range(1, N):
            assert chi(ci, k, N) == 0


def test_non_integral_twist_is_formal(X):
    value = chi(X(2, 2, 2), 1, 2)  # c1 = 1 is odd
    assert value == Fraction(1, 2)


def test_ahat_examples(X):
    assert ahat_closed(X(2, 4)) == 2
    # c1 = 1 is odd: the formal value is not the spin A-hat genus
    assert ahat_closed(X(2, 2, 2)) == Fraction(1, 2)
    for ci in (X(3, 7), X(3, 5, 5), X(3, 9)):
        assert ci.c1 < 0 and ci.c1 % 2 == 0
        assert ahat_closed(ci) == 0


def test_ak_examples(X):
    assert ak_closed(X(3, 5), 5) == 0
    assert ak_closed(X(2, 4), 2) == 4 * ahat_closed(X(2, 4)) == 8
    with pytest.raises(ValueError):
        ak_closed(X(2, 4), 0)


@given(cis)
def test_ak_one_is_todd(ci):
    assert ak_closed(ci, 1) == todd_closed(ci)


@pytest.mark.parametrize("n, degrees, expected", [(2, (4,), 2), (1, (2, 2), 0)])
def test_recurrence_examples(X, n, degrees, expected):
    assert todd_recurrence(X(n, *degrees)) == expected


def test_recurrence_needs_a_degree(X):
    with pytest.raises(ValueError):
        todd_recurrence(X(3))


@settings(max_examples=200)
@given(cis.filter(lambda ci: ci.r >= 1))
def test_recurrence_matches_closed(ci):
    assert todd_recurrence(ci) == todd_closed(ci)


@pytest.mark.parametrize("n, degrees, k", [(2, (3,), 2), (3, (2, 2), 3)])
def test_ak_from_todd_examples(X, n, degrees, k):
    assert ak_from_todd(X(n, *degrees), k) == ak_closed(X(n, *degrees), k)


def test_ak_from_todd_when_c1_vanishes(X):
    ci = X(2, 4)
    assert ak_from_todd(ci, 3) == 3**2 * todd_closed(ci)


@settings(max_examples=200)
@given(cis, st.integers(2, 6))
def test_ak_relation_to_todd(ci, k):
    assert ak_from_todd(ci, k) == ak_closed(ci, k)


@given(cis, st.integers(1, 7), st.data())
def test_symmetry(ci, N, data):
    k = data.draw(st.integers(0, N))
    assert chi(ci, k, N) == (-1) ** ci.n * chi(ci, N - k, N)


@given(cis, st.integers(1, 7), st.data())
def test_integral_when_level_divides_c1(ci, N, data):
    k = data.draw(st.integers(0, N))
    if ci.c1 % N == 0:
        assert chi(ci, k, N).denominator == 1


@given(cis, st.integers(1, 7))
def test_boundary_values(ci, N):
    assert chi(ci, 0, N) == todd_closed(ci)
    assert chi(ci, N, N) == (-1) ** ci.n * todd_closed(ci)


@given(cis, st.integers(2, 6))
def test_ak_bridge(ci, k):
    assert ak_closed(ci, k) == k**ci.n * chi(ci, k - 1, k)
    assert ak_closed(ci, k) == k**ci.n * chi_K_fraction(ci, Fraction(k - 1, k))


@given(cis, st.lists(st.just(1), max_size=3), st.integers(1, 5))
def test_invariant_under_degree_one(ci, ones, N):
    padded = normalize(ci.n, list(ci.degrees) + ones)
    assert todd_closed(padded) == todd_closed(ci)
    assert chi(padded, 1, N) == chi(ci, 1, N)
    assert ak_closed(padded, 3) == ak_closed(ci, 3)


def test_subset_enumeration():
    assert sorted(subset_sums((2, 3))) == [(0, 0), (1, 2), (1, 3), (2, 5)]
    with pytest.raises(ValueError):
        subset_sums((2,) * (MAX_CODIMENSION + 1))
