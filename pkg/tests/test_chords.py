import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammazero.chords import (
    ChordDiagram,
    ChordParseError,
    InvariantViolation,
    boundary_components,
    canonical_pairing,
    chromatic_number,
    clique_number,
    count_proper_colorings,
    enumerate_diagrams,
    enumerate_diagrams_naive,
    genus,
    intersection_graph,
    is_isomorphic,
    is_n_colorable,
    pairing_from_word,
    parse,
    rotate,
)

# canonical diagrams up to rotation, degree 0..6 (OEIS A007769)
COUNTS = [1, 1, 2, 5, 18, 105, 902]


def random_pairing(rng: random.Random, n: int) -> tuple[int, ...]:
    labels = [i for i in range(n) for _ in range(2)]
    rng.shuffle(labels)
    return pairing_from_word(labels)


pairings = st.builds(random_pairing, st.randoms(use_true_random=False), st.integers(0, 7))


def genus_by_permutations(pairing) -> int:
    """Faces of the ribbon graph as cycles of (pairing o successor)."""
    m = len(pairing)
    if m == 0:
        return 0
    seen, faces = set(), 0
    for s in range(m):
        if s in seen:
            continue
        faces += 1
        x = s
        while x not in seen:
            seen.add(x)
            x = pairing[(x + 1) % m]
    # V - E + F = 2 - 2g with one vertex (the disk) and n edges
    return (2 - (1 - m // 2 + faces)) // 2


def brute_isomorphic(g1, g2) -> bool:
    if g1.order != g2.order:
        return False
    e2 = {frozenset(e) for e in g2.edges}
    return any(
        {frozenset((perm[u], perm[v])) for u, v in g1.edges} == e2 for perm in itertools.permutations(range(g1.order))
    )


def brute_chromatic(g) -> int:
    for k in range(g.order + 1):
        for col in itertools.product(range(k), repeat=g.order):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    raise AssertionError


@pytest.mark.parametrize("n", range(7))
def test_enumeration_counts(n):
    diagrams = list(enumerate_diagrams(n))
    assert len(diagrams) == COUNTS[n]
    assert len(set(diagrams)) == len(diagrams)


@pytest.mark.parametrize("n", range(6))
def test_orderly_matches_naive(n):
    assert set(enumerate_diagrams(n)) == set(enumerate_diagrams_naive(n))


@given(pairings, st.integers(0, 20))
def test_canonical_form_is_rotation_invariant(p, k):
    if not p:
        return
    assert canonical_pairing(rotate(p, k)) == canonical_pairing(p)


@given(pairings)
def test_genus_agrees_with_permutation_oracle(p):
    assert genus(p) == genus_by_permutations(p)


@given(pairings)
def test_all_minus_state_has_one_circle(p):
    assert boundary_components(p, []) == 1


def test_small_genera():
    assert genus(parse("11")) == 0
    assert genus(parse("1212")) == 1
    assert genus(parse("123123")) == 1
    assert genus(parse("12341234")) == 2


def test_parse_forms_agree():
    d = parse("1212")
    assert parse(json.dumps(d.to_json())) == d
    assert parse({"degree": 2, "chords": [[0, 2], [1, 3]]}) == d
    assert parse("abab") == d
    assert parse("") == ChordDiagram.empty()


@pytest.mark.parametrize("bad", ["121", "1213", "12-21", '{"degree": 2, "chords": [[0, 1], [1, 2]]}'])
def test_parse_errors(bad):
    with pytest.raises(ChordParseError):
        parse(bad)


def test_non_canonical_construction_rejected():
    with pytest.raises(InvariantViolation):
        ChordDiagram((3, 2, 1, 0))


def test_reflection():
    d = parse("121323")
    assert d.reflected().reflected() == d
    assert parse("1212").is_reflection_of(parse("1212"))


@given(pairings, pairings)
@settings(max_examples=60)
def test_isomorphism_against_brute_force(p, q):
    g1, g2 = intersection_graph(p), intersection_graph(q)
    if g1.order <= 6 and g2.order <= 6:
        assert is_isomorphic(g1, g2) == brute_isomorphic(g1, g2)


@given(pairings)
@settings(max_examples=60)
def test_graph_is_rotation_invariant(p):
    assert is_isomorphic(intersection_graph(p), intersection_graph(rotate(p, 3)))


@given(pairings)
@settings(max_examples=60)
def test_coloring(p):
    g = intersection_graph(p)
    if g.order > 6:
        return
    chi = chromatic_number(g)
    assert chi == brute_chromatic(g)
    ok, witness = is_n_colorable(g, chi)
    assert ok and all(witness[u] != witness[v] for u, v in g.edges)
    if chi:
        assert not is_n_colorable(g, chi - 1)[0]
    assert clique_number(g) <= chi
    assert count_proper_colorings(g, chi) > 0


def test_count_proper_colorings_triangle():
    g = intersection_graph(parse("123123"))
    assert count_proper_colorings(g, 3) == 6
    assert count_proper_colorings(g, 2) == 0
