import json
import random

import pytest

from gammazero.cabling import count_one_colorable_lifts, iter_one_colorable_lifts, lift
from gammazero.chords import enumerate_diagrams, intersection_graph, is_isomorphic, pairing_from_word, parse, word_of
from gammazero.mutation import (
    Arrangement,
    FlipError,
    MutationError,
    Share,
    SharedDiagram,
    build_words,
    canonical_start,
    check_psi,
    decompose,
    enumerate_shares,
    exhaustive_instances,
    flip,
    mutate_type_A,
    parse_slot,
    psi_map,
    random_shared_diagram,
    share_from_ranges,
    slot_name,
    verify_many,
    verify_prop_key,
)


def slots(*names):
    return [parse_slot(n) for n in names]


@pytest.fixture(scope="module")
def flip_example(data_dir):
    ex = json.loads((data_dir / "flip_example.json").read_text())
    sd = share_from_ranges(pairing_from_word(ex["diagram"]), (0, 4), (7, 11))
    lifted = lift(sd.pairing, ex["colors"], ex["p"])
    return sd, Arrangement.of_lift(sd, lifted)


def test_share_geometry():
    s = Share(3, 1, 3, 1)
    assert [s.arc_of(x) for x in range(8)] == [0, 0, 0, 1, 2, 2, 2, 3]
    assert [s.tau(x) for x in range(8)] == [2, 1, 0, 3, 6, 5, 4, 7]
    assert s.describe() == "I=0..2,J=4..6"


def test_hand_computed_mutant():
    # I = 0..2, X = 3, J = 4..6, Y = 7
    sd = share_from_ranges(pairing_from_word("11232443"), (0, 2), (4, 6))
    assert "".join(map(str, word_of(sd.mutated().pairing))) == "12234413"
    assert mutate_type_A(pairing_from_word("11232443"), (0, 2), (4, 6)) == parse("12234413")


def test_mutation_is_an_involution():
    rng = random.Random(11)
    for _ in range(100):
        sd = random_shared_diagram(rng, 6)
        assert sd.mutated().mutated() == sd


def test_rejects_chord_with_one_leg_in_share():
    with pytest.raises(MutationError, match="exactly one leg"):
        share_from_ranges(pairing_from_word("1212"), (0, 0), (3, 3))


def test_rejects_empty_arc():
    with pytest.raises(MutationError):
        Share(0, 1, 1, 0)
    with pytest.raises(MutationError):
        SharedDiagram((1, 0), Share(1, 0, 2, 0))


def test_enumerate_shares_are_valid():
    for d in enumerate_diagrams(3):
        for sd in enumerate_shares(d):
            assert sd.share.legs == 6


def test_slot_names():
    for t in range(32):
        assert parse_slot(slot_name(t)) == t
    assert slot_name(0) == "I1" and slot_name(7) == "Y2"


def test_flip_example_class(flip_example):
    _, arr = flip_example
    R = decompose(arr).R
    assert [slot_name(t) for t in R[0]] == ["I1", "I3", "J3", "J4", "I6", "J7"]


def test_flip_example_trace(flip_example):
    _, arr = flip_example
    tr = build_words(decompose(arr).R[0], 8).trace()
    assert tr["W"] == "IIJJIJ"
    assert tr["W_rev"] == "JIJJII"
    assert tr["gaps"] == {
        "I->I": ["XJYIXJY"],
        "I->J": ["X", "XJYIX"],
        "J->I": ["YIXJY", "YIXJY"],
        "J->J": ["YIX"],
    }
    assert tr["R_rev"] == ["J1", "I3", "J3", "J4", "I6", "I8"]
    assert tr["gluing"] == ["I8", "I6", "J4", "J3", "I3", "J1"]


def test_flip_example_result(flip_example):
    sd, arr = flip_example
    new, _, _ = flip(arr, decompose(arr).R[0])
    where = {x: slot_name(t) for t, c in enumerate(new.slots) for x in c}
    # a1 a2 b1 d2 e1 | x1 x2 | b2 c1 c2 d1 e2 at legs 0..11
    assert where[0] == "I8"
    assert where[1] == where[2] == "I6"
    assert where[7] == where[8] == "J4"
    assert where[9] == where[10] == "J3"
    assert where[3] == where[4] == "I3"
    assert where[11] == "J1"
    assert where[5] == where[6] == "X6"


def test_printed_class_does_not_reproduce_the_printed_gaps():
    fw = build_words(slots("I1", "I3", "J3", "J6", "I8", "J8"), 8)
    assert fw.gap_words()["J->J"] != ["YIX"]
    assert fw.gap_words()["I->J"] != ["X", "XJYIX"]


def test_build_words_rejects_outside_slots():
    with pytest.raises(FlipError):
        build_words(slots("X1"), 2)


def test_canonical_start_is_shift_invariant():
    cls = slots("I1", "I3", "J3", "J4", "I6", "J7")
    p = 8
    k = canonical_start(cls, p)
    shifted = sorted((t + 4) % (4 * p) for t in cls)
    k2 = canonical_start(shifted, p)
    assert (sorted(cls)[k] + 4) % (4 * p) == shifted[k2]


def test_psi_images_are_lifts_of_the_mutant():
    sd = share_from_ranges(pairing_from_word("11232443"), (0, 2), (4, 6))
    mut = sd.mutated()
    images = set()
    for l in iter_one_colorable_lifts(sd.pairing, 2):
        img = psi_map(sd, l)
        assert img.base == mut.pairing
        assert img.is_one_colorable()
        images.add(img.coloring.colors)
    assert len(images) == count_one_colorable_lifts(mut.pairing, 2).count


def test_psi_bijective_through_degree_three():
    for p in (2, 3):
        for sd in exhaustive_instances(3):
            assert check_psi(sd, p), (sd, p)


def test_paper_reading_of_psi_is_not_injective():
    sd = share_from_ranges(pairing_from_word("11"), (0, 0), (1, 1))
    images = set()
    lifts = list(iter_one_colorable_lifts(sd.pairing, 3))
    for l in lifts:
        arr = Arrangement.of_lift(sd, l)
        for cls in decompose(arr).R:
            if any(arr.slots[t] for t in cls):
                arr, _, _ = flip(arr, cls)
        images.add(tuple(arr.slots))
    assert len(images) < len(lifts)


def test_verdicts_and_graphs():
    sd = share_from_ranges(pairing_from_word("11232443"), (0, 2), (4, 6))
    v = verify_prop_key(sd, 2, psi_max_degree=4)
    assert v.equal and v.psi_ok and v.graphs_isomorphic
    assert v.row()["verdict"] == "equal"


def test_verify_many_parallel_matches_serial():
    inst = list(exhaustive_instances(2))
    assert [v.row() for v in verify_many(inst, 2, jobs=2)] == [v.row() for v in verify_many(inst, 2)]


def test_random_instances_are_mutable_and_graph_preserving():
    rng = random.Random(4)
    for _ in range(100):
        sd = random_shared_diagram(rng, 7)
        assert is_isomorphic(intersection_graph(sd.pairing), intersection_graph(sd.mutated().pairing))
