"""Type-A mutation along a share, and the flip bijection between lifts.

A share is a pair of disjoint arcs ``I`` and ``J``; reading from the
basepoint (the start of ``I``) the circle is ``I X J Y``. Diagrams here are
raw pairings already rotated so that ``I`` starts at leg 0.

On the p-fold cover the arcs lift to ``4p`` slots
``I_1 X_1 J_1 Y_1 I_2 ... Y_p``; slot ``4(c-1) + k`` holds the legs of arc
``"IXJY"[k]`` carrying color ``c``, in circle order. A flip is a
rearrangement of slots: one chord-connected class of I/J slots is mirrored
and the gaps between its slots are re-laid as blocks.
"""

from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cabling import (
    LegColoring,
    LiftedDiagram,
    count_one_colorable_lifts,
    iter_one_colorable_lifts,
)
from .chords import (
    ChordDiagram,
    InvariantViolation,
    canonical_pairing,
    check_pairing,
    chords_of,
    enumerate_diagrams,
    intersection_graph,
    is_isomorphic,
    rotate,
    word_of,
)

ARC_TYPES = "IXJY"


class MutationError(ValueError):
    pass


class FlipError(RuntimeError):
    pass


@dataclass(frozen=True)
class Share:
    i_len: int
    x_len: int
    j_len: int
    y_len: int

    def __post_init__(self) -> None:
        if self.i_len < 1 or self.j_len < 1:
            raise MutationError("I and J must each contain at least one leg")
        if self.x_len < 0 or self.y_len < 0:
            raise MutationError("negative arc length")

    @property
    def legs(self) -> int:
        return self.i_len + self.x_len + self.j_len + self.y_len

    @property
    def j_start(self) -> int:
        return self.i_len + self.x_len

    def arc_of(self, x: int) -> int:
        """Index into ``"IXJY"`` of the arc containing leg ``x``."""
        if x < self.i_len:
            return 0
        if x < self.j_start:
            return 1
        if x < self.j_start + self.j_len:
            return 2
        return 3

    def in_share(self, x: int) -> bool:
        return self.arc_of(x) in (0, 2)

    def tau(self, x: int) -> int:
        """Leg position after reversing I and J in place."""
        k = self.arc_of(x)
        if k == 0:
            return self.i_len - 1 - x
        if k == 2:
            return 2 * self.j_start + self.j_len - 1 - x
        return x

    def describe(self) -> str:
        i, j = self.i_len, self.j_start
        return f"I=0..{i - 1},J={j}..{j + self.j_len - 1}"


@dataclass(frozen=True)
class SharedDiagram:
    """A raw pairing rotated so the share's I arc starts at leg 0."""

    pairing: tuple[int, ...]
    share: Share

    def __post_init__(self) -> None:
        check_pairing(self.pairing)
        if self.share.legs != len(self.pairing):
            raise MutationError(f"share covers {self.share.legs} legs, diagram has {len(self.pairing)}")
        for x, y in chords_of(self.pairing):
            if self.share.in_share(x) != self.share.in_share(y):
                raise MutationError(
                    f"chord ({x}, {y}) has exactly one leg in the share; mutation is undefined"
                )

    @property
    def diagram(self) -> ChordDiagram:
        return ChordDiagram.from_pairing(self.pairing)

    def mutated(self) -> "SharedDiagram":
        t = self.share.tau
        new = [0] * len(self.pairing)
        for x, y in enumerate(self.pairing):
            new[t(x)] = t(y)
        return SharedDiagram(tuple(new), self.share)


def share_from_ranges(d: ChordDiagram | Sequence[int], i_range: tuple[int, int], j_range: tuple[int, int]) -> SharedDiagram:
    """Share from inclusive leg ranges ``I = a..b`` and ``J = c..d`` (cyclic, in that order)."""
    pairing = d.pairing if isinstance(d, ChordDiagram) else tuple(d)
    m = len(pairing)
    a, b = i_range
    c, e = j_range
    if not all(0 <= v < m for v in (a, b, c, e)):
        raise MutationError(f"share endpoints must lie in 0..{m - 1}")
    i_len = (b - a) % m + 1
    x_len = (c - b - 1) % m
    j_len = (e - c) % m + 1
    y_len = m - i_len - x_len - j_len
    if y_len < 0 or i_len + x_len > m - 1:
        raise MutationError("I and J overlap or are out of circle order")
    return SharedDiagram(rotate(pairing, -a), Share(i_len, x_len, j_len, y_len))


def mutate_type_A(d: ChordDiagram | Sequence[int], i_range: tuple[int, int], j_range: tuple[int, int]) -> ChordDiagram:
    return share_from_ranges(d, i_range, j_range).mutated().diagram


def enumerate_shares(d: ChordDiagram) -> list[SharedDiagram]:
    """Every share along which ``d`` is mutable, up to rotation of the rotated pairing."""
    m = len(d.pairing)
    out: dict[tuple, SharedDiagram] = {}
    for a in range(m):
        rot = rotate(d.pairing, -a)
        for i_len in range(1, m):
            for x_len in range(0, m - i_len):
                for j_len in range(1, m - i_len - x_len + 1):
                    y_len = m - i_len - x_len - j_len
                    share = Share(i_len, x_len, j_len, y_len)
                    if all(share.in_share(x) == share.in_share(y) for x, y in chords_of(rot)):
                        out.setdefault((rot, i_len, x_len, j_len), SharedDiagram(rot, share))
    return list(out.values())


def random_shared_diagram(rng: random.Random, max_degree: int = 8, min_degree: int = 1) -> SharedDiagram:
    """Random arc lengths, then chords matched uniformly inside I+J and inside X+Y."""
    n = rng.randint(min_degree, max_degree)
    m = 2 * n
    while True:
        cuts = sorted(rng.sample(range(1, m + 2), 3))
        i_len, x_len, j_len = cuts[0], cuts[1] - cuts[0] - 1, cuts[2] - cuts[1]
        y_len = m - i_len - x_len - j_len
        if y_len < 0 or j_len < 1 or (i_len + j_len) % 2:
            continue
        break
    share = Share(i_len, x_len, j_len, y_len)
    inside = [x for x in range(m) if share.in_share(x)]
    outside = [x for x in range(m) if not share.in_share(x)]
    pairing = [0] * m
    for group in (inside, outside):
        rng.shuffle(group)
        for u, v in zip(group[::2], group[1::2]):
            pairing[u], pairing[v] = v, u
    return SharedDiagram(tuple(pairing), share)


# -- slots ------------------------------------------------------------------------------------


def slot_name(t: int) -> str:
    return f"{ARC_TYPES[t % 4]}{t // 4 + 1}"


def parse_slot(name: str) -> int:
    return 4 * (int(name[1:]) - 1) + ARC_TYPES.index(name[0])


@dataclass
class Arrangement:
    """Slot contents on the cover: ``slots[t]`` lists base legs in circle order."""

    sd: SharedDiagram
    p: int
    slots: list[tuple[int, ...]]

    @classmethod
    def of_lift(cls, sd: SharedDiagram, lifted: LiftedDiagram) -> "Arrangement":
        p = lifted.p
        slots: list[list[int]] = [[] for _ in range(4 * p)]
        for x, c in enumerate(lifted.coloring.colors):
            slots[4 * (c - 1) + sd.share.arc_of(x)].append(x)
        return cls(sd, p, [tuple(s) for s in slots])

    def slot_of_leg(self) -> dict[int, int]:
        return {x: t for t, content in enumerate(self.slots) for x in content}


@dataclass(frozen=True)
class LiftDecomposition:
    """Chord-connected classes of share slots (R) and of outside slots (S)."""

    R: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...]

    def named(self) -> dict[str, list[list[str]]]:
        return {
            "R": [[slot_name(t) for t in c] for c in self.R],
            "S": [[slot_name(t) for t in c] for c in self.S],
        }


def decompose(arr: Arrangement) -> LiftDecomposition:
    """Union-find over slots joined by a chord; classes numbered by least slot."""
    parent = list(range(4 * arr.p))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    where = arr.slot_of_leg()
    for x, y in chords_of(arr.sd.pairing):
        ru, rv = find(where[x]), find(where[y])
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = defaultdict(list)
    for t in range(4 * arr.p):
        groups[find(t)].append(t)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
    R = tuple(c for c in classes if c[0] % 2 == 0)
    S = tuple(c for c in classes if c[0] % 2 == 1)
    return LiftDecomposition(R, S)


@dataclass
class FlipWords:
    W: str
    W_rev: str
    gaps: dict[str, list[tuple[int, ...]]]
    R: tuple[int, ...]
    R_rev: tuple[int, ...]
    gap_targets: dict[tuple[int, ...], int] = field(default_factory=dict)

    def gap_words(self) -> dict[str, list[str]]:
        return {k: ["".join(ARC_TYPES[t % 4] for t in g) for g in v] for k, v in self.gaps.items()}

    def gluing(self) -> list[tuple[str, str]]:
        """Interval j of the class goes to interval ``m + 1 - j`` of the reversed set."""
        m = len(self.R)
        return [(slot_name(self.R[j]), slot_name(self.R_rev[m - 1 - j])) for j in range(m)]

    def trace(self) -> dict[str, object]:
        words = self.gap_words()
        return {
            "R": [slot_name(t) for t in self.R],
            "W": self.W,
            "W_rev": self.W_rev,
            "gaps": {k: words[k] for k in ("I->I", "I->J", "J->I", "J->J")},
            "R_rev": [slot_name(t) for t in self.R_rev],
            "gluing": [b for _, b in self.gluing()],
        }


def _gap(a: int, b: int, n_slots: int) -> tuple[int, ...]:
    """Slots strictly between ``a`` and ``b`` going forward (all others if ``a == b``)."""
    length = (b - a - 1) % n_slots if a != b else n_slots - 1
    return tuple((a + 1 + k) % n_slots for k in range(length))


def build_words(cls: Sequence[int], p: int, anchor: int = 1, start: int = 0) -> FlipWords:
    """Words, gap lists and the reversed slot set for one class of share slots.

    The class is read cyclically from its ``start``-th least slot (default: the
    least). ``anchor`` is the copy whose I or J slot begins the reversed set.
    """
    ordered = tuple(sorted(cls))
    n_slots = 4 * p
    m = len(ordered)
    if m == 0 or any(t % 2 for t in ordered):
        raise FlipError("a class of share slots must be a nonempty set of I/J slots")
    R = ordered[start:] + ordered[:start]
    letters = [ARC_TYPES[t % 4] for t in R]
    W = "".join(letters)
    gaps: dict[str, list[tuple[int, ...]]] = {k: [] for k in ("I->I", "I->J", "J->I", "J->J")}
    for s in range(m):
        gaps[f"{letters[s]}->{letters[(s + 1) % m]}"].append(_gap(R[s], R[(s + 1) % m], n_slots))
    W_rev = W[::-1]
    pending = {k: list(v) for k, v in gaps.items()}
    first = 4 * (anchor - 1) + (0 if W_rev[0] == "I" else 2)
    rev = [first]
    targets: dict[tuple[int, ...], int] = {}
    for k in range(m):
        key = f"{W_rev[k]}->{W_rev[(k + 1) % m]}"
        if not pending[key]:
            raise FlipError(f"no gap word left for {key}")
        g = pending[key].pop(0)
        targets[g] = (rev[-1] + 1) % n_slots
        nxt = (rev[-1] + len(g) + 1) % n_slots
        if ARC_TYPES[nxt % 4] != W_rev[(k + 1) % m]:
            raise FlipError(f"gap {key} of length {len(g)} lands on {slot_name(nxt)}")
        if k < m - 1:
            rev.append(nxt)
        elif nxt != first:
            raise FlipError("gaps do not close up around the cover")
    return FlipWords(W, W_rev, gaps, R, tuple(rev), targets)


def canonical_start(cls: Sequence[int], p: int) -> int:
    """Index of the slot from which the class reads as the least (letter, gap) sequence.

    The choice depends only on the class's shape, not on where the cover is
    cut, so flips commute with shifting every color by one. Ties (shapes with
    rotational symmetry) go to the least slot.
    """
    ordered = sorted(cls)
    m = len(ordered)
    n_slots = 4 * p

    def shape(k: int) -> tuple[tuple[str, int], ...]:
        seq = ordered[k:] + ordered[:k]
        return tuple(
            (ARC_TYPES[seq[i] % 4], len(_gap(seq[i], seq[(i + 1) % m], n_slots))) for i in range(m)
        )

    return min(range(m), key=lambda k: (shape(k), ordered[k]))


def flip(
    arr: Arrangement, cls: Sequence[int], anchor: int = 1, start: int = 0
) -> tuple[Arrangement, list[int], FlipWords]:
    """Mirror one class and re-lay its gaps; returns (new arrangement, old->new slot map, words)."""
    fw = build_words(cls, arr.p, anchor, start)
    n_slots = 4 * arr.p
    new: list[tuple[int, ...] | None] = [None] * n_slots
    moved = [-1] * n_slots
    m = len(fw.R)
    for j, src in enumerate(fw.R):
        dst = fw.R_rev[m - 1 - j]
        new[dst] = tuple(reversed(arr.slots[src]))
        moved[src] = dst
    for g, dst0 in fw.gap_targets.items():
        for k, src in enumerate(g):
            dst = (dst0 + k) % n_slots
            if new[dst] is not None:
                raise FlipError(f"slot {slot_name(dst)} filled twice")
            new[dst] = arr.slots[src]
            moved[src] = dst
    if any(s is None for s in new):
        raise FlipError("flip left a slot empty-handed")
    return Arrangement(arr.sd, arr.p, new), moved, fw  # type: ignore[arg-type]


def psi_map(sd: SharedDiagram, lifted: LiftedDiagram) -> LiftedDiagram:
    """Flip every class of share slots in turn; the result is a lift of the mutant.

    Classes come from the input lift (empty slots are left alone) and are
    carried along by each flip's slot map. Each class is read from its
    canonical start slot and its reversed set begins in that slot's copy.
    """
    if not lifted.is_one_colorable():
        raise MutationError("input lift has crossing chords")
    arr = Arrangement.of_lift(sd, lifted)
    classes = [list(c) for c in decompose(arr).R if any(arr.slots[t] for t in c)]
    for i in range(len(classes)):
        cls = sorted(classes[i])
        k = canonical_start(cls, arr.p)
        arr, moved, _ = flip(arr, cls, cls[k] // 4 + 1, k)
        classes = [[moved[t] for t in c] for c in classes]
    return _to_mutant_lift(sd, arr)


def _to_mutant_lift(sd: SharedDiagram, arr: Arrangement) -> LiftedDiagram:
    share = sd.share
    colors = [0] * len(sd.pairing)
    for t, content in enumerate(arr.slots):
        if any(share.arc_of(x) != t % 4 for x in content):
            raise InvariantViolation(f"slot {slot_name(t)} holds legs of another arc")
        new_pos = [share.tau(x) for x in content]
        if new_pos != sorted(new_pos):
            raise InvariantViolation(f"slot {slot_name(t)} is not in mutant order")
        for x in content:
            colors[share.tau(x)] = t // 4 + 1
    return LiftedDiagram(sd.mutated().pairing, LegColoring(tuple(colors), arr.p))


# -- verification ----------------------------------------------------------------------------


@dataclass
class PropKeyVerdict:
    diagram: str
    share: str
    p: int
    count: int
    count_mutant: int
    psi_checked: bool = False
    psi_ok: bool | None = None
    graphs_isomorphic: bool | None = None

    @property
    def equal(self) -> bool:
        return self.count == self.count_mutant and self.psi_ok is not False

    def row(self) -> dict[str, object]:
        return {
            "diagram": self.diagram,
            "share": self.share,
            "p": self.p,
            "lifts": self.count,
            "lifts_mutant": self.count_mutant,
            "psi_checked": int(self.psi_checked),
            "psi_bijective": "" if self.psi_ok is None else int(self.psi_ok),
            "graphs_isomorphic": "" if self.graphs_isomorphic is None else int(self.graphs_isomorphic),
            "verdict": "equal" if self.equal else "unequal",
        }


def check_psi(sd: SharedDiagram, p: int) -> bool:
    """Psi sends Lift(D) injectively into Lift(D^tau), onto when the counts agree."""
    mut = sd.mutated()
    targets = set()
    n = 0
    for lifted in iter_one_colorable_lifts(sd.pairing, p):
        img = psi_map(sd, lifted)
        if not img.is_one_colorable():
            return False
        targets.add(img.coloring.colors)
        n += 1
    return len(targets) == n == count_one_colorable_lifts(mut.pairing, p).count


def verify_prop_key(sd: SharedDiagram, p: int, psi_max_degree: int = 3, check_graphs: bool = True) -> PropKeyVerdict:
    mut = sd.mutated()
    v = PropKeyVerdict(
        diagram=str(ChordDiagram.from_pairing(canonical_pairing(sd.pairing))),
        share=sd.share.describe() + " on " + "".join(map(str, word_of(sd.pairing))),
        p=p,
        count=count_one_colorable_lifts(sd.pairing, p).count,
        count_mutant=count_one_colorable_lifts(mut.pairing, p).count,
    )
    if len(sd.pairing) // 2 <= psi_max_degree:
        v.psi_checked = True
        v.psi_ok = check_psi(sd, p)
    if check_graphs:
        v.graphs_isomorphic = is_isomorphic(intersection_graph(sd.pairing), intersection_graph(mut.pairing))
    return v


def exhaustive_instances(max_degree: int) -> Iterator[SharedDiagram]:
    for n in range(1, max_degree + 1):
        for d in enumerate_diagrams(n):
            yield from enumerate_shares(d)


def _verify_job(args: tuple[SharedDiagram, int, int]) -> PropKeyVerdict:
    sd, p, psi_deg = args
    return verify_prop_key(sd, p, psi_deg)


def verify_many(instances: Sequence[SharedDiagram], p: int, psi_max_degree: int = 3, jobs: int = 1) -> list[PropKeyVerdict]:
    work = [(sd, p, psi_max_degree) for sd in instances]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_verify_job, work, chunksize=32))
    return [_verify_job(w) for w in work]


__all__ = [
    "ARC_TYPES",
    "Arrangement",
    "FlipError",
    "FlipWords",
    "LiftDecomposition",
    "MutationError",
    "PropKeyVerdict",
    "Share",
    "SharedDiagram",
    "build_words",
    "canonical_start",
    "check_psi",
    "decompose",
    "enumerate_shares",
    "exhaustive_instances",
    "flip",
    "mutate_type_A",
    "parse_slot",
    "psi_map",
    "random_shared_diagram",
    "share_from_ranges",
    "slot_name",
    "verify_many",
    "verify_prop_key",
]
