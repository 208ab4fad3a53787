from fractions import Fraction

import pytest

from gammazero.chords import enumerate_diagrams, genus, parse
from gammazero.algebra import connect_sum
from gammazero.poly import LaurentPoly
from gammazero.weights import (
    BivariateSeries,
    BudgetExceeded,
    NWeight,
    SeriesError,
    diagonal_project,
    expand_homfly,
    gamma0_from_diagonal,
    gamma_expansion,
    sinhc_diagonal,
    weight_gamma0,
    weight_sl,
    weight_sl_reference,
)

AZ = ("a", "z")


def upto(n):
    return [d for k in range(n + 1) for d in enumerate_diagrams(k)]


def n_poly(t):
    return LaurentPoly(("N",), {(k,): v for k, v in t.items()})


def test_known_values():
    assert weight_sl(parse("")).poly == n_poly({1: 1})
    assert weight_sl(parse("11")).poly == n_poly({2: 1, 0: -1})
    assert weight_sl(parse("1212")).poly == n_poly({1: -1, -1: 1})


@pytest.mark.parametrize("d", upto(4), ids=str)
def test_kernel_matches_reference(d):
    assert weight_sl(d) == weight_sl_reference(d)


def test_multiplicative_under_connected_sum():
    ds = upto(3)
    for d1 in ds:
        for d2 in ds:
            lhs = weight_sl(connect_sum(d1, d2)).poly * n_poly({1: 1})
            assert lhs == weight_sl(d1).poly * weight_sl(d2).poly


@pytest.mark.parametrize("d", upto(5), ids=str)
def test_top_coefficient_is_genus_zero_indicator(d):
    w = weight_sl(d)
    assert diagonal_project(w) == weight_gamma0(d)
    assert w.max_exponent() <= d.degree + 1 - 2 * genus(d)


def test_state_cap():
    with pytest.raises(BudgetExceeded):
        weight_sl(parse("1122"), cap=1)


def test_nweight_guards():
    with pytest.raises(ValueError):
        NWeight(n_poly({5: 1}), 2)
    with pytest.raises(ValueError):
        NWeight(LaurentPoly(("a",), {(1,): 1}), 2)


def test_bivariate_rejects_negative_exponents():
    with pytest.raises(SeriesError):
        BivariateSeries(3, {(-1, 0): 1})


def test_expansion_of_one_is_the_prefactor():
    s = expand_homfly(LaurentPoly.constant(AZ, 1), 1, 6)
    # (a - 1/a)/z with a = e^{Nh/2}: leading term N, no h-only terms
    assert s[(1, 0)] == 1
    assert all(i >= 1 for i, _ in s.coeffs)
    assert all(i <= j + 1 for i, j in s.coeffs)
    assert s.diagonal() == sinhc_diagonal(6)


def test_sinhc_series():
    assert sinhc_diagonal(4) == [1, 0, Fraction(1, 24), 0, Fraction(1, 1920)]


def test_gamma_expansion():
    a2 = LaurentPoly(("a",), {(2,): 1})
    # e^{x}: 1, 1, 1/2, 1/6
    assert gamma_expansion(a2, 3) == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_gamma0_from_diagonal_on_unknot():
    s = expand_homfly(LaurentPoly.constant(AZ, 1), 1, 8)
    assert gamma0_from_diagonal(s) == [1] + [0] * 8


def test_link_factor_under_plus_sign_has_pole():
    with pytest.raises(SeriesError):
        expand_homfly(LaurentPoly(AZ, {(1, -1): 1, (-1, -1): 1}), 2, 4)


def test_link_factor_under_standard_sign_expands():
    s = expand_homfly(LaurentPoly(AZ, {(1, -1): 1, (-1, -1): -1}), 2, 4)
    assert s[(2, 0)] == 1
