"""Lifts of chord diagrams to the p-fold cover of the circle.

Cutting the circle at the basepoint, its p-fold cover is p copies
``L_1, ..., L_p`` of the cut interval laid end to end. A leg coloring
``s: legs -> {1..p}`` sends leg ``x`` to its copy in ``L_{s(x)}``; on a
circle with ``2n`` legs that is covering position ``(s(x) - 1) * 2n + x``.
"""

from __future__ import annotations

import csv
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import _kernels
from .algebra import ChordSeries, STRUT, exp_strut
from .chords import (
    ChordDiagram,
    check_pairing,
    chords_of,
    count_proper_colorings,
    genus,
    interleaved,
    intersection_graph,
    is_n_colorable,
)

DEFAULT_LIFT_BUDGET = 3**12
COUNT_BUDGET = 3**24


class BudgetExceeded(RuntimeError):
    pass


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class LegColoring:
    colors: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ColoringError("p must be at least 1")
        bad = [c for c in self.colors if not 1 <= c <= self.p]
        if bad:
            raise ColoringError(f"colors {bad} outside 1..{self.p}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, x: int) -> int:
        return self.colors[x]


@dataclass(frozen=True)
class LiftedDiagram:
    """A lift: the base pairing, the coloring, and the covering-circle chords."""

    base: tuple[int, ...]
    coloring: LegColoring

    @property
    def p(self) -> int:
        return self.coloring.p

    @property
    def positions(self) -> tuple[int, ...]:
        """Covering position of each base leg."""
        m = len(self.base)
        return tuple((c - 1) * m + x for x, c in enumerate(self.coloring.colors))

    def covering_chords(self) -> list[tuple[int, int]]:
        pos = self.positions
        return [tuple(sorted((pos[x], pos[y]))) for x, y in chords_of(self.base)]  # type: ignore[misc]

    def interval(self, copy: int) -> tuple[int, int]:
        """Half-open arc of ``L_copy`` on the covering circle."""
        m = len(self.base)
        return ((copy - 1) * m, copy * m)

    def base_leg(self, position: int) -> tuple[int, int]:
        """(base leg, copy) of a covering position."""
        m = len(self.base)
        return position % m, position // m + 1

    def diagram(self) -> ChordDiagram:
        """The lifted chords as a chord diagram (empty covering positions dropped)."""
        pos = self.positions
        order = sorted(range(len(pos)), key=pos.__getitem__)
        rank = {x: r for r, x in enumerate(order)}
        return ChordDiagram.from_pairing([rank[self.base[x]] for x in order])

    def project(self) -> tuple[int, ...]:
        """Forget the coloring: the base pairing."""
        return self.base

    def is_one_colorable(self) -> bool:
        ch = self.covering_chords()
        return not any(interleaved(*a, *b) for a, b in itertools.combinations(ch, 2))


def _pairing(d: ChordDiagram | Sequence[int]) -> tuple[int, ...]:
    if isinstance(d, ChordDiagram):
        return d.pairing
    check_pairing(d)
    return tuple(d)


def lift(d: ChordDiagram | Sequence[int], s: LegColoring | Sequence[int], p: int | None = None) -> LiftedDiagram:
    base = _pairing(d)
    if not isinstance(s, LegColoring):
        if p is None:
            raise ColoringError("p is required with a raw coloring")
        s = LegColoring(tuple(s), p)
    elif p is not None and p != s.p:
        raise ColoringError("p disagrees with the coloring")
    if len(s) != len(base):
        raise ColoringError(f"coloring has {len(s)} entries for {len(base)} legs")
    return LiftedDiagram(base, s)


# -- counting -------------------------------------------------------------------------------


@dataclass(frozen=True)
class LiftCount:
    base: ChordDiagram
    p: int
    count: int
    by_genus: dict[int, int] | None = None


def search_order(pairing: Sequence[int]) -> list[int]:
    """Chords (as their smaller leg) by interleave-degree descending, then position."""
    ch = chords_of(pairing)
    deg = [sum(interleaved(*a, *b) for b in ch if b != a) for a in ch]
    idx = sorted(range(len(ch)), key=lambda i: (-deg[i], ch[i]))
    return [ch[i][0] for i in idx]


def _check_budget(n: int, p: int, budget: int) -> None:
    size = p ** (2 * n)
    if size > budget:
        raise BudgetExceeded(f"{p}^{2 * n} = {size} colorings exceed the budget of {budget}")


def count_one_colorable_lifts(
    d: ChordDiagram | Sequence[int], p: int, budget: int | None = COUNT_BUDGET
) -> LiftCount:
    """Number of leg colorings whose lift has no crossing chords (pruned search)."""
    pairing = _pairing(d)
    if p < 1:
        raise ColoringError("p must be at least 1")
    if budget is not None:
        _check_budget(len(pairing) // 2, p, budget)
    n = _kernels.count_lifts(pairing, p, search_order(pairing))
    return LiftCount(ChordDiagram.from_pairing(pairing), p, n)


def iter_colorings(m: int, p: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1, p + 1), repeat=m)


def count_lifts_naive(
    d: ChordDiagram | Sequence[int], p: int, interval_order: Sequence[int] | None = None, census: bool = False
) -> LiftCount:
    """All ``p^(2n)`` colorings tested one by one.

    With ``census`` every lift, 1-colorable or not, is also tallied by genus.

    ``interval_order`` places copy ``c`` at slot ``interval_order[c - 1]``
    around the cover instead of slot ``c``.
    """
    pairing = _pairing(d)
    m = len(pairing)
    perm = list(interval_order) if interval_order is not None else list(range(1, p + 1))
    if sorted(perm) != list(range(1, p + 1)):
        raise ColoringError("interval order must be a permutation of 1..p")
    ch = chords_of(pairing)
    total = 0
    hist: dict[int, int] = {}
    for s in iter_colorings(m, p):
        pos = [(perm[c - 1] - 1) * m + x for x, c in enumerate(s)]
        lifted = [tuple(sorted((pos[x], pos[y]))) for x, y in ch]
        if census:
            g = genus(lift(pairing, s, p).diagram())
            hist[g] = hist.get(g, 0) + 1
        if any(interleaved(*a, *b) for a, b in itertools.combinations(lifted, 2)):
            continue
        total += 1
    return LiftCount(ChordDiagram.from_pairing(pairing), p, total, hist if census else None)


def iter_one_colorable_lifts(d: ChordDiagram | Sequence[int], p: int) -> Iterator[LiftedDiagram]:
    """Every 1-colorable lift, by backtracking over legs in position order."""
    pairing = _pairing(d)
    m = len(pairing)
    s = [0] * m
    placed: list[tuple[int, int]] = []

    def go(x: int) -> Iterator[LiftedDiagram]:
        if x == m:
            yield LiftedDiagram(pairing, LegColoring(tuple(s), p))
            return
        y = pairing[x]
        if y < x:
            yield from go(x + 1)
            return
        for cx in range(1, p + 1):
            for cy in range(1, p + 1):
                a, b = sorted(((cx - 1) * m + x, (cy - 1) * m + y))
                if any(interleaved(a, b, c, e) for c, e in placed):
                    continue
                s[x], s[y] = cx, cy
                placed.append((a, b))
                yield from go(x + 1)
                placed.pop()

    yield from go(0)


def chord_coloring_lift(d: ChordDiagram | Sequence[int], chord_colors: Sequence[int], p: int) -> LiftedDiagram:
    """Lift in which both legs of chord k carry the chord's color ``chord_colors[k]``."""
    pairing = _pairing(d)
    s = [0] * len(pairing)
    for k, (x, y) in enumerate(chords_of(pairing)):
        s[x] = s[y] = chord_colors[k]
    return lift(pairing, s, p)


# -- psi and the cabling formula -------------------------------------------------------------------


def psi(d: ChordDiagram | Sequence[int], p: int, budget: int | None = DEFAULT_LIFT_BUDGET) -> ChordSeries:
    """Sum of the lifts over all leg colorings."""
    pairing = _pairing(d)
    n = len(pairing) // 2
    if budget is not None:
        _check_budget(n, p, budget)
    terms: dict[ChordDiagram, Fraction] = {}
    for s in iter_colorings(len(pairing), p):
        t = lift(pairing, s, p).diagram()
        terms[t] = terms.get(t, Fraction(0)) + 1
    return ChordSeries(terms, max_degree=max(n, 0))


def psi_series(z: ChordSeries, p: int, budget: int | None = DEFAULT_LIFT_BUDGET) -> ChordSeries:
    out = ChordSeries({}, z.max_degree, z.truncated)
    for d, c in z.terms.items():
        out = out + ChordSeries(psi(d, p, budget).terms, z.max_degree).scale(c)
    return out


def cabling_transform(z: ChordSeries, p: int, q: int, cap: int, budget: int | None = DEFAULT_LIFT_BUDGET) -> ChordSeries:
    """``psi(Z # exp(q/(2p) strut)) # exp(-(q/2) strut)``, truncated above degree ``cap``."""
    if p < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"(p, q) = ({p}, {q}) must be coprime with p >= 1")
    framed = z.truncate(cap) * exp_strut(Fraction(q, 2 * p), cap)
    return psi_series(framed, p, budget) * exp_strut(Fraction(-q, 2), cap)


# -- Question 1 -------------------------------------------------------------------------------------------


@dataclass(frozen=True)
class Question1Row:
    diagram: ChordDiagram
    degree: int
    colorable: bool
    lift_count: int

    @property
    def verdict(self) -> str:
        if self.colorable and self.lift_count == 0:
            return "VIOLATION"
        if not self.colorable and self.lift_count > 0:
            return "converse-fails"
        return "consistent"


def _q1_row(args: tuple[tuple[int, ...], int]) -> Question1Row:
    pairing, p = args
    d = ChordDiagram.from_pairing(pairing)
    ok, _ = is_n_colorable(intersection_graph(d), p)
    return Question1Row(d, d.degree, ok, count_one_colorable_lifts(d, p).count)


def question1_explore(max_degree: int, p: int, jobs: int = 1) -> list[Question1Row]:
    """Compare p-colorability of the intersection graph with the existence of a 1-colorable lift."""
    from .chords import enumerate_diagrams

    work = [(d.pairing, p) for k in range(max_degree + 1) for d in enumerate_diagrams(k)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            rows = list(ex.map(_q1_row, work, chunksize=16))
    else:
        rows = [_q1_row(w) for w in work]
    return rows


def write_question1_csv(rows: Sequence[Question1Row], path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["diagram", "degree", "chromatic_number_le_p", "lift_count", "verdict"])
        for r in rows:
            w.writerow([str(r.diagram), r.degree, int(r.colorable), r.lift_count, r.verdict])


def induced_lift_lower_bound(d: ChordDiagram, p: int) -> int:
    """Proper p-colorings of the intersection graph (each induces a 1-colorable lift)."""
    return count_proper_colorings(intersection_graph(d), p)


__all__ = [
    "BudgetExceeded",
    "ColoringError",
    "LegColoring",
    "LiftCount",
    "LiftedDiagram",
    "Question1Row",
    "STRUT",
    "cabling_transform",
    "chord_coloring_lift",
    "count_lifts_naive",
    "count_one_colorable_lifts",
    "induced_lift_lower_bound",
    "iter_one_colorable_lifts",
    "lift",
    "psi",
    "psi_series",
    "question1_explore",
    "search_order",
    "write_question1_csv",
]
