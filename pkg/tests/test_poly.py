from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammazero.poly import LaurentPoly, univariate

V = ("a", "z")

exps = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda t: LaurentPoly(V, t))
points = st.tuples(
    st.fractions(min_value=Fraction(1, 3), max_value=3, max_denominator=3),
    st.fractions(min_value=Fraction(1, 3), max_value=3, max_denominator=3),
)


def at(p: LaurentPoly, pt) -> Fraction:
    return sum((Fraction(c) * pt[0] ** e[0] * pt[1] ** e[1] for e, c in p.terms.items()), Fraction(0))


@given(polys, polys, points)
def test_evaluation_is_a_ring_map(p, q, pt):
    assert at(p + q, pt) == at(p, pt) + at(q, pt)
    assert at(p * q, pt) == at(p, pt) * at(q, pt)
    assert at(p - q, pt) == at(p, pt) - at(q, pt)


@given(polys, polys, polys)
@settings(max_examples=50)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == LaurentPoly(V)


def test_zero_terms_are_dropped_and_integral_fractions_normalized():
    p = LaurentPoly(V, {(1, 0): 0, (0, 1): Fraction(4, 2)})
    assert p.terms == {(0, 1): 2}
    assert isinstance(p.terms[(0, 1)], int)


def test_monomial_inverse_and_power():
    a = LaurentPoly.var(V, "a")
    assert a ** -2 * a ** 2 == 1
    with pytest.raises(ValueError):
        (a + 1) ** -1


def test_substitute():
    p = univariate("a", {2: 1, -1: 3})
    assert p.substitute("a", 2) == LaurentPoly((), {(): Fraction(4) + Fraction(3, 2)})


def test_terms_round_trip():
    p = LaurentPoly(V, {(2, -1): Fraction(-3, 7), (0, 0): 5})
    assert LaurentPoly.from_terms(V, p.to_terms()) == p
    assert all(isinstance(t["coefficient"], str) for t in p.to_terms())


def test_str():
    assert str(LaurentPoly(V)) == "0"
    assert str(LaurentPoly(V, {(1, -1): -1, (0, 0): 2})) == "-a*z^(-1) + 2"
