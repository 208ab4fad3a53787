import random

import pytest

from conftest import fixture_knots
from gammazero.poly import LaurentPoly
from gammazero.skein import (
    PLUS,
    STANDARD,
    PDError,
    SkeinBudgetExceeded,
    add_kink,
    blackboard_parallel,
    braid_closure,
    cable,
    disjoint_union,
    from_knotinfo,
    gamma0,
    gamma0_from_homfly,
    gamma_coefficients,
    homfly,
    kinked_unknot,
    mirror_poly,
    parse_pd,
    torus_braid,
    unknot,
    unlink,
    unlink_homfly,
    verify_mutant_cable,
)

AZ = ("a", "z")
A = ("a",)


def az(terms):
    return LaurentPoly(AZ, terms)


def poly_a(terms):
    return LaurentPoly(A, terms)


SMALL = [(n, d, i) for n, d, i in fixture_knots(8)]


# -- parsing ----------------------------------------------------------------------


def test_parse_trefoil(trefoil):
    assert trefoil.components == 1
    assert abs(trefoil.writhe) == 3


def test_parse_special_cases():
    assert parse_pd("").components == 1
    assert parse_pd("O\nO").components == 2
    assert parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").components == 1


@pytest.mark.parametrize("bad", ["X 1 2 3", "X 1 2 3 4", "X 1 1 2 3\nX 2 4 4 5"])
def test_parse_errors(bad):
    with pytest.raises(PDError):
        parse_pd(bad)


def test_pd_text_round_trip(conway):
    again = parse_pd(conway.to_pd_text())
    assert homfly(again) == homfly(conway)


# -- skein relation ----------------------------------------------------------------------


def test_unknot_and_unlinks():
    assert homfly(unknot()) == 1
    a, z = LaurentPoly.var(AZ, "a"), LaurentPoly.var(AZ, "z")
    loop = (a + a**-1) * z**-1
    for r in range(1, 5):
        assert homfly(unlink(r)) == loop ** (r - 1) == unlink_homfly(r)


def test_kinked_unknot_and_two_component_unlink():
    for s in (1, -1):
        assert homfly(kinked_unknot(s)) == 1
    a, z = LaurentPoly.var(AZ, "a"), LaurentPoly.var(AZ, "z")
    # smoothing a kink gives a 2-component unlink diagram
    assert homfly(kinked_unknot(1).smooth(0)) == (a + a**-1) * z**-1


@pytest.mark.parametrize("conv", [PLUS, STANDARD], ids=lambda c: c.name)
def test_skein_identity_at_200_random_crossings(conv):
    rng = random.Random(2026)
    pool = [d for _, d, _ in SMALL] + [cable(kinked_unknot(1), 2, 3), braid_closure([1, 1, 2, -1, 2, 2], 3)]
    z = LaurentPoly.var(AZ, "z")
    for _ in range(200):
        d = rng.choice(pool)
        idx = rng.randrange(len(d.crossings))
        if d.crossings[idx].sign > 0:
            plus, minus = d, d.switch(idx)
        else:
            plus, minus = d.switch(idx), d
        lhs = conv.x_plus() * homfly(plus, conv) + conv.x_minus() * homfly(minus, conv)
        assert lhs == z * homfly(d.smooth(idx), conv)


@pytest.mark.parametrize("name,d,info", SMALL + list(fixture_knots(11))[-2:], ids=lambda v: v if isinstance(v, str) else "")
def test_matches_knot_tables_up_to_mirror(name, d, info):
    for conv in (PLUS, STANDARD):
        ref = from_knotinfo(info["homfly_knotinfo_vz"], conv)
        assert homfly(d, conv) in (ref, mirror_poly(ref, conv))


@pytest.mark.parametrize("name,d,info", SMALL, ids=lambda v: v if isinstance(v, str) else "")
def test_braid_and_pd_diagrams_agree(name, d, info):
    assert homfly(braid_closure(info["braid"])) == homfly(d)


def test_kinks_do_not_change_the_polynomial(figure_eight):
    for sign in (1, -1):
        e = figure_eight.crossings[0].pd[0]
        assert homfly(add_kink(figure_eight, e, sign)) == homfly(figure_eight)


def test_mirror(trefoil):
    for conv in (PLUS, STANDARD):
        assert homfly(trefoil.mirror(), conv) == mirror_poly(homfly(trefoil, conv), conv)


def test_disjoint_union_multiplies_by_loop(trefoil, figure_eight):
    u = disjoint_union(trefoil, figure_eight)
    assert homfly(u) == homfly(trefoil) * homfly(figure_eight) * unlink_homfly(2)


def test_budget():
    with pytest.raises(SkeinBudgetExceeded):
        homfly(cable(braid_closure(torus_braid(2, 5)), 2, 1), budget_secs=0.0)


# -- coefficient polynomials ------------------------------------------------------------------


@pytest.mark.parametrize("name,d,info", SMALL, ids=lambda v: v if isinstance(v, str) else "")
def test_gamma_coefficients_and_direct_gamma0(name, d, info):
    for conv in (PLUS, STANDARD):
        p = homfly(d, conv)
        gamma_coefficients(p, 1)
        assert gamma0(d, conv) == gamma0_from_homfly(p, 1)


def test_gamma0_of_unlinks():
    for r in range(1, 5):
        assert gamma0(unlink(r)) == poly_a({(0,): 1, (2,): 1}) ** (r - 1)


def test_trefoil_values(trefoil):
    p = homfly(trefoil)
    g = gamma0(trefoil)
    left = g == poly_a({(4,): -1, (2,): -2})
    right = g == poly_a({(-4,): -1, (-2,): -2})
    assert left or right
    assert p in (az({(4, 0): -1, (2, 2): 1, (2, 0): -2}), az({(-4, 0): -1, (-2, 2): 1, (-2, 0): -2}))


def test_gamma0_on_links_matches_homfly():
    rng = random.Random(8)
    for _ in range(20):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(2, 7))]
        d = braid_closure(word, 3)
        for conv in (PLUS, STANDARD):
            assert gamma0(d, conv) == gamma0_from_homfly(homfly(d, conv), d.components)


def test_residual_odd_powers_are_rejected():
    with pytest.raises(ValueError):
        gamma_coefficients(az({(0, 1): 1}), 1)


# -- cables ------------------------------------------------------------------------------


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 2), (3, 4), (2, -3)])
def test_cable_of_unknot_is_torus_knot(p, q):
    assert homfly(cable(unknot(), p, q)) == homfly(braid_closure(torus_braid(p, q), p))


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("p,q", [(2, 3), (3, 2), (2, 1)])
def test_cable_of_kinked_unknot_is_torus_knot(sign, p, q):
    assert homfly(cable(kinked_unknot(sign), p, q)) == homfly(braid_closure(torus_braid(p, q), p))


def test_one_cable_is_the_knot(trefoil):
    for q in (0, 3, -2):
        assert homfly(cable(trefoil, 1, q)) == homfly(trefoil)


def test_two_parallel_of_kink_without_twists():
    # q - p*w = 0 for a positive kink at (p, q) = (2, 2); not a cable since gcd = 2
    with pytest.raises(PDError):
        cable(kinked_unknot(1), 2, 2)
    parallel = blackboard_parallel(kinked_unknot(1), 2)
    assert parallel.components == 2
    assert homfly(parallel) == homfly(braid_closure([1, 1], 2))
    assert homfly(blackboard_parallel(kinked_unknot(1), 2, -2)) == homfly(unlink(2))


def test_cable_is_diagram_independent(trefoil):
    kinked = add_kink(trefoil, trefoil.crossings[0].pd[0], 1)
    assert homfly(cable(kinked, 2, 1)) == homfly(cable(trefoil, 2, 1))


def test_cable_rejects_bad_input(trefoil):
    with pytest.raises(PDError):
        cable(trefoil, 2, 4)
    with pytest.raises(PDError):
        cable(unlink(2), 2, 1)


def test_verify_mutant_cable(conway, kt, trefoil):
    v = verify_mutant_cable(conway, kt, 1, 0)
    assert v.equal and v.gamma0[0] == gamma0(conway)
    assert verify_mutant_cable(trefoil, trefoil, 2, 1).equal
    assert verify_mutant_cable(trefoil, trefoil.mirror(), 1, 0).status == "unequal"
    assert verify_mutant_cable(conway, kt, 2, 1, budget_secs=0.0).status == "budget-exceeded"
