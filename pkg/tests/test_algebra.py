import random
from fractions import Fraction

import pytest

from gammazero.algebra import (
    STRUT,
    ChordSeries,
    FrameError,
    connect_sum,
    exp_strut,
    generate_4T,
    random_4T_frame,
    strut_power,
)
from gammazero.chords import enumerate_diagrams, parse
from gammazero.weights import weight_sl


def test_exp_strut_additive():
    for a, b in [(Fraction(1, 2), Fraction(1, 3)), (2, -2), (Fraction(-3, 4), 1)]:
        assert exp_strut(a, 5) * exp_strut(b, 5) == exp_strut(Fraction(a) + Fraction(b), 5)


def test_exp_strut_zero_is_unit():
    assert exp_strut(0, 4) == ChordSeries.unit(4)


def test_strut_powers():
    assert strut_power(1) == STRUT
    assert strut_power(2) == parse("1122")
    assert ChordSeries.of(STRUT) * ChordSeries.of(STRUT) == ChordSeries.of(parse("1122"))


def small():
    return [d for n in range(3) for d in enumerate_diagrams(n)]


def test_connected_sum_commutative_and_associative_on_small_diagrams():
    ds = small()
    for d1 in ds:
        for d2 in ds:
            assert connect_sum(d1, d2) == connect_sum(d2, d1) or d1.degree + d2.degree > 4
            for d3 in ds[:4]:
                assert connect_sum(connect_sum(d1, d2), d3) == connect_sum(d1, connect_sum(d2, d3))


def test_series_arithmetic():
    x = ChordSeries({parse("11"): Fraction(1, 2), parse("1212"): 3}, 4)
    y = ChordSeries({parse("11"): -Fraction(1, 2)}, 4)
    assert (x + y).terms == {parse("1212"): 3}
    assert (x - x).terms == {}
    assert ChordSeries.from_json(x.to_json(), 4) == x


def test_truncation_is_recorded():
    s = exp_strut(1, 2) * exp_strut(1, 2)
    assert s.truncated
    assert all(d.degree <= 2 for d in s.terms)


def test_generate_4T_rejects_bad_frames():
    with pytest.raises(FrameError):
        generate_4T(parse("1212"), 0, 0)
    with pytest.raises(FrameError):
        generate_4T(parse("1122"), 5, 0)


def weight_of_combination(combo):
    total = None
    for sign, d in combo:
        w = weight_sl(d).poly * sign
        total = w if total is None else total + w
    return total


def test_sl_weight_kills_1000_random_4T_relations():
    rng = random.Random(20260)
    for _ in range(1000):
        frame, t, m = random_4T_frame(rng, 2, 6)
        assert weight_of_combination(generate_4T(frame, t, m)).is_zero()


def test_opposite_sign_pattern_is_not_annihilated():
    rng = random.Random(1)
    misses = 0
    for _ in range(50):
        frame, t, m = random_4T_frame(rng, 3, 5)
        combo = generate_4T(frame, t, m)
        flipped = [(1, combo[0][1]), (-1, combo[1][1]), (1, combo[2][1]), (-1, combo[3][1])]
        misses += not weight_of_combination(flipped).is_zero()
    assert misses > 0
