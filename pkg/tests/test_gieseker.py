import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from chernfm.errors import PreconditionError
from chernfm.gieseker import (
    SurfaceCase,
    VerdictKind,
    destabilizes_2d,
    destabilizes_3d,
    evaluation_order,
    lex_vector_3d,
    reduced_hilbert_compare,
    surface_compare,
    verdict_matches_evaluation,
)
from chernfm.lattice import ChernCharacter, Surface, Threefold
from chernfm.poly import Order

small = st.integers(-4, 4)


def ch3(*e, d=1):
    return ChernCharacter.from_entries(Threefold(d), *e)


def srf(*e, g=1):
    return ChernCharacter.from_entries(Surface(g), *e)


@st.composite
def two_dim(draw, d=1):
    e = [0] + [draw(small) for _ in range(5)]
    assume(e[1] != 0 or e[3] != 0)
    return ch3(*e, d=d)


def test_lex_vector_examples():
    assert lex_vector_3d(ch3(1, 0, 0, 0, 0, 0)) == (0,) * 5
    for d in (1, 2, 3):
        v = lex_vector_3d(ch3(1, 0, 0, 1, 0, 0, d=d))
        assert v[0] == 2 * d and v[-1] == 2
    with pytest.raises(PreconditionError):
        lex_vector_3d(ch3(0, 0, 0, 1, 0, 0))


@given(st.lists(small, min_size=5, max_size=5), st.integers(1, 4))
def test_lex_vector_homogeneous(rest, k):
    v = ch3(1, *rest)
    assert lex_vector_3d(v * k) == lex_vector_3d(v)
    assert destabilizes_3d(v * k, v).kind is VerdictKind.NEUTRAL


def test_destabilizes_3d_fiber_degree():
    verdict = destabilizes_3d(ch3(1, 0, 0, 1, 0, 0), ch3(1, 0, 0, 0, 0, 0))
    assert verdict.kind is VerdictKind.DESTABILIZES and verdict.index == 0
    assert destabilizes_3d(ch3(2, 1, 0, 3, 1, 1), ch3(2, 1, 0, 3, 1, 1)).kind is VerdictKind.NEUTRAL


@given(st.integers(1, 4), small, small, st.integers(1, 4), small, small, st.integers(1, 3))
def test_section_pattern_matches_lexicographic_oracle(a, b, c, a2, b2, c2, d):
    sub, amb = ch3(0, 0, 0, a, b, c, d=d), ch3(0, 0, 0, a2, b2, c2, d=d)
    expected = oracles.lex((Fraction(b, a), Fraction(c + 2 * a, a)),
                           (Fraction(b2, a2), Fraction(c2 + 2 * a2, a2)))
    assert destabilizes_2d(sub, amb).order == Order.of(expected)


def test_two_dim_examples():
    v = ch3(0, 0, 0, 2, 1, 3)
    assert destabilizes_2d(v, v).kind is VerdictKind.NEUTRAL
    below = destabilizes_2d(ch3(0, 0, 0, 2, 0, 0), ch3(0, 0, 0, 1, 1, 0))
    assert below.kind is VerdictKind.STRICTLY_BELOW and below.witness == "leading"
    with pytest.raises(PreconditionError):
        destabilizes_2d(ch3(0, 0, 0, 0, 1, 0), v)
    with pytest.raises(PreconditionError):
        destabilizes_2d(ch3(1, 0, 0, 1, 0, 0), v)


@given(two_dim(), two_dim())
def test_two_dim_agrees_with_polynomial_and_evaluation(sub, amb):
    verdict = destabilizes_2d(sub, amb)
    assert verdict.order == reduced_hilbert_compare(sub, amb)
    assert verdict_matches_evaluation(verdict, sub, amb)


@given(two_dim(), two_dim(), st.integers(1, 4), st.integers(1, 4))
def test_two_dim_homogeneous(sub, amb, j, k):
    assert destabilizes_2d(sub * j, amb * k).kind is destabilizes_2d(sub, amb).kind


def test_two_dim_transitive_on_grid():
    grid = [ch3(0, a01, a02, a10, a11, 0) for a01 in (0, 1) for a02 in (-1, 1)
            for a10 in (1, 2) for a11 in (-1, 0, 2)]
    rel = {(i, j): destabilizes_2d(x, y).order for i, x in enumerate(grid) for j, y in enumerate(grid)}
    for i, j, k in itertools.product(range(len(grid)), repeat=3):
        if rel[i, j] is not Order.LESS and rel[j, k] is not Order.LESS:
            assert rel[i, k] is not Order.LESS


def test_surface_examples():
    tf = surface_compare(srf(1, 0, 0, 0), srf(1, 0, 1, 0), "torsion-free")
    assert tf.kind is VerdictKind.STRICTLY_BELOW and tf.index == 0
    # chi(F) c1(F').f / c1(F).f < chi(F'): here chi' = 1, chi = 1, fiber degrees 2 and 1
    od = surface_compare(srf(0, 0, 2, 1), srf(0, 0, 1, 1), SurfaceCase.ONE_DIMENSIONAL)
    assert od.kind is VerdictKind.STRICTLY_BELOW and od.witness == "chi-vs-fiber-degree"
    v = srf(2, 1, 3, 4)
    assert surface_compare(v, v, "TorsionFree").kind is VerdictKind.NEUTRAL
    with pytest.raises(PreconditionError):
        surface_compare(srf(0, 0, 0, 3), srf(0, 0, 1, 1), "one-dimensional")
    with pytest.raises(PreconditionError):
        surface_compare(srf(0, 1, 0, 3), srf(0, 1, 0, 1), "one-dimensional")
    with pytest.raises(PreconditionError):
        surface_compare(srf(0, 1, 1, 3), srf(1, 1, 0, 1), "torsion-free")


@st.composite
def surface_pair(draw):
    g = draw(st.integers(0, 3))
    case = draw(st.sampled_from(list(SurfaceCase)))
    if case is SurfaceCase.TORSION_FREE:
        sub = srf(draw(st.integers(1, 4)), draw(small), draw(small), draw(small), g=g)
        amb = srf(draw(st.integers(1, 4)), draw(small), draw(small), draw(small), g=g)
    else:
        sub = srf(0, draw(small), draw(small), draw(small), g=g)
        assume(sub[0, 1] or sub[1, 0])
        amb = srf(0, draw(small), draw(st.integers(1, 4)), draw(small), g=g)
    return sub, amb, case, draw(st.sampled_from(["grr", "naive"]))


@given(surface_pair())
def test_surface_staged_matches_polynomial_and_evaluation(data):
    sub, amb, case, conv = data
    verdict = surface_compare(sub, amb, case, conv)
    assert verdict.order == reduced_hilbert_compare(sub, amb, conv)
    assert verdict_matches_evaluation(verdict, sub, amb, chi_convention=conv)


def test_evaluation_oracle_by_hand():
    # (0,0,0;1,0,0) vs (0,0,0;1,1,0): reduced m-coefficients 0 vs 2/n
    assert evaluation_order(ch3(0, 0, 0, 1, 0, 0), ch3(0, 0, 0, 1, 1, 0), 5) is Order.LESS
    assert oracles.reduced_vector([2, 0, 1]) == (1, 0, 2)
