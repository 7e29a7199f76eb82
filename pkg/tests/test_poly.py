from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chernfm.poly import (
    Order,
    RationalPoly,
    cauchy_threshold,
    eventual_sign,
    lex_compare,
    poly_compare_large_param,
)

coeff_lists = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=7), max_size=5)


def P(*cs, var="n"):
    return RationalPoly(cs, var)


def test_trailing_zeros_stripped():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert P().degree == -1


def test_floats_rejected():
    with pytest.raises(TypeError):
        P(1.5)


@pytest.mark.parametrize("p, q, expected", [
    (P(0, 0, 1), P(0, 0, 2), Order.LESS),
    (P(0, 5, 1), P(100, 3, 1), Order.GREATER),
    (P(3, 1), P(3, 1), Order.EQUAL),
])
def test_large_param_examples(p, q, expected):
    assert poly_compare_large_param(p, q) is expected


def test_parameter_mismatch():
    with pytest.raises(ValueError):
        poly_compare_large_param(P(0, 1, var="n"), P(0, 1, var="s"))


def test_nested_coefficients():
    n = P(0, 1)
    p = RationalPoly([n, n * n], "m")
    assert eventual_sign(p) == 1
    assert eventual_sign(-p) == -1
    assert str(P(1, -1)) == "-n + 1"


@given(coeff_lists, coeff_lists)
def test_ring_laws(a, b):
    p, q = P(*a), P(*b)
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    for x in (-2, 0, Fraction(1, 3), 5):
        assert (p * q)(x) == p(x) * q(x)


@given(coeff_lists)
def test_cauchy_threshold_certifies_sign(a):
    p = P(*a)
    n0 = cauchy_threshold(p)
    s = eventual_sign(p)
    for k in range(0, 40, 3):
        v = p(n0 + k)
        assert (v > 0) - (v < 0) == s


@given(coeff_lists, coeff_lists)
def test_compare_matches_evaluation(a, b):
    p, q = P(*a), P(*b)
    n0 = cauchy_threshold(p - q)
    order = poly_compare_large_param(p, q)
    for k in (0, 7):
        diff = p(n0 + k) - q(n0 + k)
        assert Order.of((diff > 0) - (diff < 0)) is order


def test_lex_compare_index():
    assert lex_compare([1, 2, 3], [1, 2, 3]) == (Order.EQUAL, 3)
    assert lex_compare([1, 3], [1, 2]) == (Order.GREATER, 1)
