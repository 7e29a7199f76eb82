from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chernfm.errors import InvalidFixture, PreconditionError
from chernfm.fixtures import (
    boolean_lattice,
    chain_lattice,
    corpus_names,
    downset_lattice,
    load_corpus,
    m3_lattice,
    pentagon_lattice,
)
from chernfm.hn import (
    KClass,
    SubobjectLattice,
    ZERO,
    b01_part,
    hn_by_exhaustion,
    hn_filtration,
    maximal_destabilizer,
    mu_max,
    mu_min,
    p_compare,
    slope,
    torsion_part,
    validate_lattice,
)
from chernfm.jsonio import filtration_to_json, lattice_from_json, lattice_to_json
from chernfm.poly import Order
from chernfm.slopes import PLUS_INFINITY

CORPUS = load_corpus()


def k(c0, c1):
    return KClass(c0, Fraction(c1))


def test_kclass_basics():
    assert slope(k(2, 3)) == Fraction(3, 2)
    assert slope(k(0, 3)) == PLUS_INFINITY
    assert p_compare(k(0, 1), k(5, 100)) is Order.GREATER
    assert p_compare(k(0, 1), k(0, 0)) is Order.EQUAL
    assert p_compare(k(2, 2), k(1, 1)) is Order.EQUAL
    with pytest.raises(PreconditionError):
        KClass(1, 0.5)


def test_validation_catches_non_additive_diamond():
    labels = {"0": ZERO, "a": k(1, 1), "b": k(1, 2), "E": k(3, 3)}
    L = SubobjectLattice(labels, [("0", "a"), ("0", "b"), ("a", "E"), ("b", "E")])
    kinds = {v.kind for v in validate_lattice(L).violations}
    assert kinds == {"additivity"}
    with pytest.raises(InvalidFixture):
        hn_filtration(L)


def test_validation_catches_rank_drop_and_negative_torsion():
    L = chain_lattice([(2, 0), (-1, 0)])
    (v,) = validate_lattice(L).violations
    assert v.kind == "positivity" and v.witness == ("E1", "E2")
    L = chain_lattice([(1, 0), (0, -1)])
    assert "positivity" in {v.kind for v in validate_lattice(L).violations}
    L = SubobjectLattice({"a": ZERO, "b": k(1, 0)}, [("a", "b"), ("b", "a")])
    assert validate_lattice(L).violations[0].kind == "order"
    L = SubobjectLattice({"0": k(1, 0), "E": k(2, 0)}, [("0", "E")])
    assert validate_lattice(L).violations[0].kind == "bottom"
    with pytest.raises(InvalidFixture):
        SubobjectLattice({"0": ZERO}, [("0", "missing")])


def test_torsion_and_b01_parts():
    L = CORPUS["b01_b0_free_layers.json"]
    lat = lattice_from_json(L)
    assert lat.label(b01_part(lat)) == ZERO
    assert lat.label(torsion_part(lat)).C0 == 0
    assert lat.leq(b01_part(lat), torsion_part(lat))


def test_maximal_destabilizer_examples():
    L = chain_lattice([(1, 5), (1, 3)])
    assert maximal_destabilizer(L, "0") == "E1"
    assert maximal_destabilizer(L, "E1") == "E2"
    assert maximal_destabilizer(L, "0", "E1") == "E1"
    # equal slopes: the largest maximiser wins
    assert maximal_destabilizer(chain_lattice([(1, 2), (1, 2)]), "0") == "E2"
    B = boolean_lattice({"x": (1, 5), "y": (1, 5), "z": (1, 1)})
    assert maximal_destabilizer(B, "{}") == "{x,y}"
    with pytest.raises(PreconditionError):
        maximal_destabilizer(L, "E2")
    with pytest.raises(PreconditionError):
        maximal_destabilizer(chain_lattice([(0, 1), (1, 0)]), "0")


def test_chain_example_and_extremes():
    L = chain_lattice([(1, 5), (1, 3)])
    f = hn_filtration(L)
    assert f.chain == ("0", "0", "E1", "E2")
    assert f.slopes == (5, 3)
    assert mu_max(L) == 5 and mu_min(L) == 3
    T = chain_lattice([(0, 1), (0, 2)])
    assert hn_filtration(T).chain == ("0", "E2", "E2")
    assert mu_max(T) is None and mu_min(T) is None


def test_modular_and_pentagon_fixtures():
    assert validate_lattice(m3_lattice((1, 2))).ok
    assert hn_filtration(m3_lattice((1, 2))).chain[-1] == "E"
    P = pentagon_lattice((1, 1), (1, 0))
    assert validate_lattice(P).ok and P.label("a") == P.label("b")
    bad = SubobjectLattice({**P.labels, "b": k(2, 1), "E": k(3, 1)}, P.relations)
    assert "additivity" in {v.kind for v in validate_lattice(bad).violations}


def test_corpus_size_and_names():
    assert len(corpus_names()) >= 20


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_fixture(name):
    fx = CORPUS[name]
    L = lattice_from_json(fx)
    assert validate_lattice(L).ok
    greedy, brute = hn_filtration(L), hn_by_exhaustion(L)
    assert greedy == brute
    assert filtration_to_json(greedy) == fx["expected"]
    assert lattice_from_json(lattice_to_json(L)).labels == L.labels
    s = greedy.slopes
    assert all(a > b for a, b in zip(s, s[1:]))


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("factor", [2, Fraction(1, 3)])
def test_corpus_scaling(name, factor):
    L = lattice_from_json(CORPUS[name])
    f, g = hn_filtration(L), hn_filtration(L.scaled(factor))
    assert f.chain == g.chain
    assert g.slopes == tuple(s.value * factor for s in f.slopes)


weight = st.one_of(
    st.tuples(st.just(0), st.integers(0, 3)),
    st.tuples(st.integers(1, 3), st.integers(-4, 6)),
)


@st.composite
def downsets(draw):
    n = draw(st.integers(1, 4))
    pts = [f"p{i}" for i in range(n)]
    weights = {p: draw(weight) for p in pts}
    below = [(pts[i], pts[j]) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return downset_lattice(weights, below)


@given(downsets())
def test_greedy_matches_exhaustion_on_random_downsets(L):
    assert validate_lattice(L).ok
    f = hn_filtration(L)
    assert f == hn_by_exhaustion(L)
    s = f.slopes
    assert all(a > b for a, b in zip(s, s[1:]))
    total = f.factors[0]
    for c in f.factors[1:]:
        total = total + c
    assert total == L.label(L.top)
