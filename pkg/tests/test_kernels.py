import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammazero import _kernels
from gammazero._kernels import _pure
from gammazero.cabling import search_order
from gammazero.chords import pairing_from_word

fast = pytest.importorskip("gammazero._kernels._fast")


def random_pairing(rng, n):
    labels = [i for i in range(n) for _ in range(2)]
    rng.shuffle(labels)
    return pairing_from_word(labels)


pairings = st.builds(random_pairing, st.randoms(use_true_random=False), st.integers(0, 7))


def test_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")


@given(pairings)
def test_boundary_components_agree(p):
    assert fast.boundary_components_all(p) == _pure.boundary_components_all(p)


@given(pairings)
@settings(max_examples=50)
def test_state_sums_agree(p):
    assert fast.sl_state_sum(p) == _pure.sl_state_sum(p)


@given(pairings, st.integers(1, 3))
@settings(max_examples=50)
def test_lift_counts_agree(p, q):
    if len(p) > 10 and q == 3:
        return
    order = search_order(p)
    assert fast.count_lifts(p, q, order) == _pure.count_lifts(p, q, order)


def test_lift_count_does_not_depend_on_search_order():
    rng = random.Random(5)
    p = random_pairing(rng, 4)
    order = search_order(p)
    for _ in range(5):
        rng.shuffle(order)
        assert _pure.count_lifts(p, 2, order) == fast.count_lifts(p, 2, search_order(p))
