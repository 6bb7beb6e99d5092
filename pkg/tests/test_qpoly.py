from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poincare_cascade.errors import InvalidArgs, NotDivisible
from poincare_cascade.qpoly import (
    ONE,
    ZERO,
    IntPoly,
    add,
    check_vandermonde,
    check_parity_sums,
    check_product_identity,
    exact_div,
    gaussian,
    gaussian_recurrence,
    mul,
    t_minus_one_ratio,
)

from oracles import gaussian_by_subsets, tm1

polys = st.lists(st.integers(-20, 20), max_size=7).map(lambda c: IntPoly(tuple(c)))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*c):
    return IntPoly(tuple(c))


def test_add_examples():
    assert add(P(1, 1), P(0, 1, 1)) == P(1, 2, 1)
    assert add(P(3, 0, 5), ZERO) == P(3, 0, 5)
    assert add(P(1), P(-1)) == ZERO
    assert add(P(1), P(-1)).coeffs == ()


def test_mul_examples():
    assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert mul(P(1, 1), P(1, 0, 1)) == P(1, 1, 1, 1)
    assert mul(P(4, 5), ZERO) == ZERO


def test_exact_div_examples():
    assert exact_div(tm1(3), tm1(1)) == P(1, 1, 1)
    assert exact_div(P(1, 2, 2, 1), P(1, 1)) == P(1, 1, 1)
    with pytest.raises(NotDivisible):
        exact_div(P(1, 0, 1), P(1, 1))
    with pytest.raises(InvalidArgs):
        exact_div(P(1), ZERO)


def test_canonical_form_and_degree():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert ZERO.degree == float("-inf")
    assert P(0, 0, 3).degree == 2
    assert str(P(1, 2, 0, 1)) == "1 + 2t + t^3"


def test_gaussian_examples():
    for n in range(8):
        assert gaussian(n, 0) == ONE == gaussian(n, n)
    assert gaussian(2, 1) == P(1, 1)
    assert gaussian(4, 2) == P(1, 1, 2, 1, 1)
    with pytest.raises(InvalidArgs):
        gaussian(3, 4)
    with pytest.raises(InvalidArgs):
        gaussian(-1, 0)


@pytest.mark.parametrize("n", range(0, 11))
def test_gaussian_matches_subset_count(n):
    for r in range(n + 1):
        g = gaussian(n, r)
        assert g == gaussian_by_subsets(n, r)
        assert g.coeffs == tuple(reversed(g.coeffs))  # palindromic
        assert g(1) == comb(n, r)
        assert g.degree == r * (n - r)


@pytest.mark.parametrize("n", range(0, 17))
def test_recurrence_agrees(n):
    for r in range(n + 1):
        assert gaussian_recurrence(n, r) == gaussian(n, r)


def test_ratio():
    for k in range(1, 9):
        assert t_minus_one_ratio(k) == IntPoly((1,) * k)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (0, 5), (3, 7), (6, 6)])
def test_vandermonde_cases(m, n):
    assert check_vandermonde(m, n)


def test_vandermonde_rejects():
    with pytest.raises(InvalidArgs):
        check_vandermonde(3, 2)


def test_vandermonde_small_hand_case():
    assert gaussian(4, 2) == ONE + P(0, 1) * P(1, 1) * P(1, 1) + P(0, 0, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 4, 9])
def test_parity_sums_cases(n):
    assert check_parity_sums(n)


def test_product_identity_cases():
    for n in range(1, 6):
        assert check_product_identity(n)
    with pytest.raises(InvalidArgs):
        check_product_identity(0)


@given(polys, nonzero_polys)
def test_division_inverts_multiplication(a, b):
    assert exact_div(mul(a, b), b) == a


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert mul(a, b) == mul(b, a)
    assert add(a, b) - b == a


@given(polys)
def test_no_trailing_zeros(a):
    assert not a.coeffs or a.coeffs[-1] != 0


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, t):
    assert mul(a, b)(t) == a(t) * b(t)
    assert add(a, b)(t) == a(t) + b(t)
