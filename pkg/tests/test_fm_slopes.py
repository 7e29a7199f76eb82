from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from chernfm.errors import PreconditionError
from chernfm.fm import Wit, basis_image, fm_inverse, fm_transform, wit_sign_check
from chernfm.lattice import ChernCharacter, CohClass, DivisorClass, Surface, Threefold
from chernfm.slopes import (
    PLUS_INFINITY,
    SlopeValue,
    Trichotomy,
    mu_f,
    mu_H,
    mu_H_of_transform,
    mu_lower_star,
    mu_upper_star,
    slope_trichotomy,
)
from conftest import positive_rationals, surface_chars, threefold_chars


def ch3(*e, d=1):
    return ChernCharacter.from_entries(Threefold(d), *e)


def test_transform_examples():
    assert fm_transform(ch3(1, 2, 3, 4, 5, 6)) == ch3(4, 5, 6, -1, -2, -3)
    assert fm_transform(ch3(0, 0, 0, 1, 0, 0)) == ch3(1, 0, 0, 0, 0, 0)
    assert fm_transform(ch3(0, 0, 0, 0, 0, 0)).is_zero()
    assert fm_inverse(ch3(1, 0, 0, 0, 0, 0)) == ch3(0, 0, 0, 1, 0, 0)
    s = ChernCharacter.from_entries(Surface(1), 1, 2, 3, 4)
    assert fm_transform(s) == ChernCharacter.from_entries(Surface(1), 3, 4, -1, -2)


@pytest.mark.parametrize("geo", [Threefold(1), Threefold(3), Surface(0)])
def test_basis_table(geo):
    for i in range(2):
        for j in range(geo.ncols):
            e = ChernCharacter(geo, CohClass.basis(geo, i, j).matrix)
            expected = [0] * (2 * geo.ncols)
            expected[(1 - i) * geo.ncols + j] = (-1) ** (i + 1)
            assert list(fm_transform(e).entries) == expected
            assert fm_transform(e) == basis_image(geo, i, j)


@given(threefold_chars(), threefold_chars(d=1))
def test_involution_linearity_rank_exchange(v, w):
    w = ChernCharacter(v.geometry, w.matrix)
    assert fm_transform(fm_transform(v)) == -v
    assert fm_inverse(fm_transform(v)) == v
    assert fm_transform(fm_inverse(v)) == v
    assert fm_transform(v + w) == fm_transform(v) + fm_transform(w)
    assert fm_transform(v)[0, 0] == v[1, 0]


def test_wit_examples():
    assert wit_sign_check(ch3(0, 0, 5, 0, 0, -2), Wit.WIT1, 2)
    assert not wit_sign_check(ch3(0, 0, 5, 0, 0, 3), "WIT1", 2)
    assert wit_sign_check(ch3(0, 0, 0, 0, 0, 0), "WIT0", 0)
    assert wit_sign_check(ch3(1, 0, 0, -1, 0, 0), "WIT1", 0)
    assert not wit_sign_check(ch3(1, 0, 0, -1, 0, 0), "WIT0", 0)
    with pytest.raises(PreconditionError):
        wit_sign_check(ch3(0, 0, 0, 0, 0, 0), "WIT1", 3)
    with pytest.raises(PreconditionError):
        wit_sign_check(ChernCharacter.from_entries(Surface(1), 0, 0, 1, 0), "WIT1", 2)


def test_slope_value_order():
    assert PLUS_INFINITY == PLUS_INFINITY
    assert SlopeValue.finite(10 ** 9) < PLUS_INFINITY
    assert not PLUS_INFINITY < PLUS_INFINITY
    assert SlopeValue.finite(Fraction(1, 2)) < 1
    assert str(PLUS_INFINITY) == "+inf" and str(SlopeValue.finite(Fraction(3, 2))) == "3/2"


def test_slope_examples():
    assert mu_H(ch3(1, 1, 0, 1, 0, 0), DivisorClass(1, 1)) == 6
    assert mu_H(ch3(0, 1, 0, 1, 0, 0), DivisorClass(1, 1)) == PLUS_INFINITY
    assert mu_H(ch3(1, 0, 0, 0, 0, 0), DivisorClass(1, 1)) == 0
    assert mu_H_of_transform(ch3(1, 0, 0, 1, 2, 0), DivisorClass(1, 1)) == 6
    assert mu_H_of_transform(ch3(1, 0, 0, 0, 2, 0), DivisorClass(1, 1)) == PLUS_INFINITY
    assert mu_lower_star(ch3(0, 0, 0, 2, 3, 7)) == Fraction(3, 2)
    assert mu_f(ch3(1, 2, 3, 4, 5, 6)) == 4
    assert mu_upper_star(ch3(0, 1, 0, 1, 0, 0)) == PLUS_INFINITY
    with pytest.raises(PreconditionError):
        mu_H(ch3(1, 0, 0, 0, 0, 0), DivisorClass(1, 0))


@given(st.integers(1, 5), positive_rationals, positive_rationals)
def test_section_transform_slope_zero(d, a, b):
    assert mu_H_of_transform(ch3(0, 0, 0, 1, 0, 0, d=d), DivisorClass(a, b)) == 0


@given(threefold_chars(), positive_rationals, positive_rationals)
def test_mu_H_oracle_and_transform(v, a, b):
    w = DivisorClass(a, b)
    expected = oracles.mu_H_oracle(v.entries, a, b, v.geometry.d)
    got = mu_H(v, w)
    assert (got.value is None) == (expected is None)
    if expected is not None:
        assert got == expected
    assert mu_H_of_transform(v, w) == mu_H(fm_transform(v), w)


@given(surface_chars(), positive_rationals, positive_rationals)
def test_surface_transform_slope(v, a, b):
    w = DivisorClass(a, b)
    assert mu_H_of_transform(v, w) == mu_H(fm_transform(v), w)


@given(threefold_chars(), st.integers(1, 5))
def test_scale_invariance(v, k):
    kv = v * k
    for fn in (mu_f, mu_upper_star, mu_lower_star):
        assert fn(kv) == fn(v)
    assert mu_H(kv, DivisorClass(2, 3)) == mu_H(v, DivisorClass(2, 3))


@given(threefold_chars())
def test_star_exchange(v):
    d = v.geometry.d
    if v[1, 0] > 0:
        assert mu_upper_star(fm_transform(v)) == 2 * d * mu_lower_star(v).value
    else:
        assert mu_upper_star(fm_transform(v)).is_infinite == (v[1, 0] == 0)


def test_trichotomy():
    assert slope_trichotomy(ch3(1, 0, 0, 2, 0, 0)) is Trichotomy.PREDICT_WIT0
    assert slope_trichotomy(ch3(1, 5, 5, 0, 1, 1)) is Trichotomy.PREDICT_BOUNDARY
    assert slope_trichotomy(ch3(1, 0, 0, -2, 0, 0)) is Trichotomy.PREDICT_WIT1
    with pytest.raises(PreconditionError):
        slope_trichotomy(ch3(0, 0, 0, 1, 0, 0))
