"""Chord diagrams on an oriented circle.

A diagram of degree ``n`` is stored as a *pairing*: a tuple ``p`` of length
``2n`` with ``p[p[x]] == x`` and ``p[x] != x``. Positions run around the
circle in its orientation. :class:`ChordDiagram` always holds the canonical
representative: the rotation whose double-occurrence word, relabelled by
order of first occurrence, is lexicographically least.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from ._kernels import boundary_components_all as _kernel_boundary_all

# digits, then upper case, then lower case: keeps ASCII order equal to label order
SYMBOLS = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"

Pairing = tuple[int, ...]


class ChordParseError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


# -- raw pairing helpers ---------------------------------------------------------------


def check_pairing(pairing: Sequence[int]) -> None:
    m = len(pairing)
    if m % 2:
        raise ChordParseError(f"odd number of legs ({m})")
    for x, y in enumerate(pairing):
        if not 0 <= y < m or y == x or pairing[y] != x:
            raise ChordParseError(f"position {x} is not paired consistently")


def word_of(pairing: Sequence[int]) -> tuple[int, ...]:
    """Double-occurrence word with labels 1, 2, ... in order of first occurrence."""
    labels = [0] * len(pairing)
    nxt = 1
    for x, y in enumerate(pairing):
        if y > x:
            labels[x] = nxt
            nxt += 1
        else:
            labels[x] = labels[y]
    return tuple(labels)


def rotate(pairing: Sequence[int], k: int) -> Pairing:
    """Rotation moving position ``k`` to position 0."""
    m = len(pairing)
    if m == 0:
        return ()
    return tuple((pairing[(x + k) % m] - k) % m for x in range(m))


def canonical_pairing(pairing: Sequence[int]) -> Pairing:
    m = len(pairing)
    if m == 0:
        return ()
    best = None
    best_word = None
    for k in range(m):
        r = rotate(pairing, k)
        w = word_of(r)
        if best_word is None or w < best_word:
            best, best_word = r, w
    assert best is not None
    return best


def pairing_from_word(word: Sequence[object]) -> Pairing:
    if len(word) % 2:
        raise ChordParseError(f"odd word length {len(word)}")
    where: dict[object, list[int]] = {}
    for i, s in enumerate(word):
        where.setdefault(s, []).append(i)
    out = [0] * len(word)
    for s, pos in where.items():
        if len(pos) != 2:
            raise ChordParseError(f"symbol {s!r} occurs {len(pos)} times (expected 2)")
        a, b = pos
        out[a], out[b] = b, a
    return tuple(out)


def pairing_from_chords(chords: Iterable[Sequence[int]], degree: int | None = None) -> Pairing:
    chords = [tuple(c) for c in chords]
    m = 2 * (degree if degree is not None else len(chords))
    if len(chords) * 2 != m:
        raise ChordParseError(f"degree {degree} does not match {len(chords)} chords")
    out = [-1] * m
    for c in chords:
        if len(c) != 2:
            raise ChordParseError(f"chord {c} does not have two legs")
        a, b = c
        for x in (a, b):
            if not 0 <= x < m:
                raise ChordParseError(f"leg {x} out of range 0..{m - 1}")
            if out[x] != -1:
                raise ChordParseError(f"leg {x} used twice")
        if a == b:
            raise ChordParseError(f"chord {c} has coincident legs")
        out[a], out[b] = b, a
    return tuple(out)


def chords_of(pairing: Sequence[int]) -> list[tuple[int, int]]:
    return [(x, y) for x, y in enumerate(pairing) if x < y]


def interleaved(a: int, b: int, c: int, d: int) -> bool:
    """Do chords {a,b} and {c,d} (distinct endpoints) cross?"""
    if a > b:
        a, b = b, a
    return (a < c < b) != (a < d < b)


def boundary_walk(pairing: Sequence[int], attached: Iterable[int] | None = None) -> int:
    """Boundary circles of the disk with untwisted bands along ``attached`` positions.

    ``attached`` is a set of leg positions closed under the pairing; ``None``
    attaches every chord. Arc ``k`` runs from leg ``k`` to leg ``k+1``; on
    reaching an attached leg the walk jumps to its partner and continues on the
    arc that starts there.
    """
    m = len(pairing)
    if m == 0:
        return 1
    att = [True] * m if attached is None else [False] * m
    if attached is not None:
        for x in attached:
            att[x] = True
    seen = [False] * m
    cycles = 0
    for start in range(m):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            nxt = (k + 1) % m
            k = pairing[nxt] if att[nxt] else nxt
    return cycles


# -- the diagram type --------------------------------------------------------------------


@dataclass(frozen=True)
class ChordDiagram:
    """Canonical chord diagram. Build with :meth:`from_pairing` or :func:`parse`."""

    pairing: Pairing

    def __post_init__(self) -> None:
        check_pairing(self.pairing)
        if canonical_pairing(self.pairing) != self.pairing:
            raise InvariantViolation("ChordDiagram must hold the canonical pairing; use from_pairing")

    @classmethod
    def from_pairing(cls, pairing: Sequence[int]) -> "ChordDiagram":
        check_pairing(pairing)
        return cls(canonical_pairing(tuple(pairing)))

    @classmethod
    def empty(cls) -> "ChordDiagram":
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.pairing) // 2

    @cached_property
    def word(self) -> tuple[int, ...]:
        return word_of(self.pairing)

    @cached_property
    def chords(self) -> tuple[tuple[int, int], ...]:
        """Chords as ``(a, b)`` with ``a < b``; index ``i`` is the chord labelled ``i+1``."""
        return tuple(chords_of(self.pairing))

    def chord_of_leg(self, x: int) -> int:
        return self.word[x] - 1

    def to_word(self) -> str:
        if self.degree > len(SYMBOLS):
            raise ValueError(f"degree {self.degree} too large for the word format; use to_json")
        return "".join(SYMBOLS[i - 1] for i in self.word)

    def to_json(self) -> dict[str, object]:
        return {"degree": self.degree, "chords": [list(c) for c in self.chords]}

    def __str__(self) -> str:
        return self.to_word() if self.degree <= len(SYMBOLS) else json.dumps(self.to_json())

    def __repr__(self) -> str:
        return f"ChordDiagram({self!s})"

    def reflected(self) -> "ChordDiagram":
        """Mirror image (orientation of the circle reversed)."""
        m = len(self.pairing)
        return ChordDiagram.from_pairing(tuple(m - 1 - self.pairing[m - 1 - x] for x in range(m)))

    def is_reflection_of(self, other: "ChordDiagram") -> bool:
        return self.reflected() == other

    # -- topology
    def intersection_graph(self) -> "IntersectionGraph":
        return intersection_graph(self)

    @cached_property
    def genus(self) -> int:
        return genus(self)


def parse(text: str | dict | Sequence[Sequence[int]]) -> ChordDiagram:
    """Parse a double-occurrence word (``"1212"``) or pair-list JSON form."""
    if isinstance(text, dict):
        return ChordDiagram.from_pairing(pairing_from_chords(text["chords"], text.get("degree")))
    if not isinstance(text, str):
        return ChordDiagram.from_pairing(pairing_from_chords(text))
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        obj = json.loads(s)
        if isinstance(obj, dict):
            return parse(obj)
        return ChordDiagram.from_pairing(pairing_from_chords(obj))
    if s in ("", "0", "-"):
        return ChordDiagram.empty()
    bad = [ch for ch in s if not ch.isalnum()]
    if bad:
        raise ChordParseError(f"unexpected character {bad[0]!r} in word")
    return ChordDiagram.from_pairing(pairing_from_word(s))


# -- intersection graphs and colorings --------------------------------------------


def intersects(c1: Sequence[int], c2: Sequence[int]) -> bool:
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) != 4:
        raise ValueError("chords must have four distinct legs")
    return interleaved(a, b, c, d)


@dataclass(frozen=True)
class IntersectionGraph:
    order: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def is_edgeless(self) -> bool:
        return not self.edges


def intersection_graph(d: ChordDiagram | Sequence[int]) -> IntersectionGraph:
    pairing = d.pairing if isinstance(d, ChordDiagram) else tuple(d)
    chords = chords_of(pairing)
    edges = set()
    for i, (a, b) in enumerate(chords):
        for j in range(i + 1, len(chords)):
            c, e = chords[j]
            if interleaved(a, b, c, e):
                edges.add((i, j))
    return IntersectionGraph(len(chords), frozenset(edges))


def is_n_colorable(g: IntersectionGraph, n: int) -> tuple[bool, dict[int, int] | None]:
    """Exact backtracking test; the witness maps vertices to colours ``1..n``."""
    if g.order == 0:
        return True, {}
    if n <= 0:
        return False, None
    adj = g.adjacency
    order = sorted(range(g.order), key=lambda v: (-len(adj[v]), v))
    color: dict[int, int] = {}

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {color[w] for w in adj[v] if w in color}
        # symmetry break: never open more than one new colour
        top = max(color.values(), default=0)
        for c in range(1, min(n, top + 1) + 1):
            if c not in used:
                color[v] = c
                if go(i + 1):
                    return True
                del color[v]
        return False

    if go(0):
        return True, dict(sorted(color.items()))
    return False, None


def chromatic_number(g: IntersectionGraph) -> int:
    k = 0
    while not is_n_colorable(g, k)[0]:
        k += 1
    return k


def clique_number(g: IntersectionGraph) -> int:
    adj = g.adjacency
    best = 0

    def grow(clique: int, cand: set[int]) -> None:
        nonlocal best
        best = max(best, clique)
        while cand:
            if clique + len(cand) <= best:
                return
            v = cand.pop()
            grow(clique + 1, cand & adj[v])

    grow(0, set(range(g.order)))
    return best


def count_proper_colorings(g: IntersectionGraph, n: int) -> int:
    adj = g.adjacency
    color = [0] * g.order

    def go(v: int) -> int:
        if v == g.order:
            return 1
        total = 0
        for c in range(1, n + 1):
            if all(color[w] != c for w in adj[v] if w < v):
                color[v] = c
                total += go(v + 1)
        color[v] = 0
        return total

    return go(0)


def is_isomorphic(g1: IntersectionGraph, g2: IntersectionGraph) -> bool:
    """Exact isomorphism search with degree-based pruning."""
    if g1.order != g2.order or len(g1.edges) != len(g2.edges):
        return False
    a1, a2 = g1.adjacency, g2.adjacency
    if sorted(map(len, a1)) != sorted(map(len, a2)):
        return False
    n = g1.order
    order = sorted(range(n), key=lambda v: -len(a1[v]))
    image: dict[int, int] = {}
    used = [False] * n

    def go(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or len(a2[w]) != len(a1[v]):
                continue
            if all((image[u] in a2[w]) == (u in a1[v]) for u in image):
                image[v] = w
                used[w] = True
                if go(i + 1):
                    return True
                used[w] = False
                del image[v]
        return False

    return go(0)


# -- surfaces ---------------------------------------------------------------------------


def boundary_components(d: ChordDiagram | Sequence[int], attached: Iterable[int] | None = None) -> int:
    """Boundary circles after attaching bands along the chords with indices in ``attached``.

    ``attached=None`` means every chord (the all-plus state).
    """
    if isinstance(d, ChordDiagram):
        pairing, chords = d.pairing, d.chords
    else:
        pairing = tuple(d)
        chords = tuple(chords_of(pairing))
    if attached is None:
        return boundary_walk(pairing)
    legs = []
    for i in attached:
        if not 0 <= i < len(chords):
            raise ValueError(f"chord index {i} out of range")
        legs.extend(chords[i])
    return boundary_walk(pairing, legs)


def genus(d: ChordDiagram | Sequence[int]) -> int:
    pairing = d.pairing if isinstance(d, ChordDiagram) else tuple(d)
    n = len(pairing) // 2
    s = _kernel_boundary_all(pairing)
    twice = n + 1 - s
    if twice < 0 or twice % 2:
        raise InvariantViolation(f"non-integral genus from s={s}, degree={n}")
    return twice // 2


# -- enumeration ------------------------------------------------------------------------


def enumerate_diagrams(degree: int) -> Iterator[ChordDiagram]:
    """Every canonical diagram of the given degree exactly once, in word order.

    Orderly generation: words are built left to right in increasing order and a
    prefix is cut as soon as one of its rotations already beats it.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        yield ChordDiagram.empty()
        return
    m = 2 * degree
    word: list[int] = []
    open_at: dict[int, int] = {}  # label -> position of its first leg

    def prefix_ok() -> bool:
        L = len(word)
        # rotation starting at k: compare its relabelled window with word[:L-k]
        for k in range(1, L):
            relabel: dict[int, int] = {}
            nxt = 1
            for t in range(k, L):
                s = word[t]
                if s not in relabel:
                    relabel[s] = nxt
                    nxt += 1
                r = relabel[s]
                w = word[t - k]
                if r < w:
                    return False
                if r > w:
                    break
        return True

    def full_ok() -> bool:
        w = tuple(word)
        for k in range(1, m):
            if word_of(rotate(pairing_from_word(w), k)) < w:
                return False
        return True

    def go(next_label: int, n_closed: int) -> Iterator[ChordDiagram]:
        L = len(word)
        if L == m:
            if full_ok():
                yield ChordDiagram(pairing_from_word(word))
            return
        # candidates in increasing label order: close an open chord, or open a new one
        opened = sorted(s for s in open_at)
        cands = list(opened)
        if next_label <= degree:
            cands.append(next_label)
        for s in cands:
            if s == next_label:
                open_at[s] = L
                word.append(s)
                if prefix_ok():
                    yield from go(next_label + 1, n_closed)
                word.pop()
                del open_at[s]
            else:
                pos = open_at.pop(s)
                word.append(s)
                if prefix_ok():
                    yield from go(next_label, n_closed + 1)
                word.pop()
                open_at[s] = pos

    yield from go(1, 0)


def enumerate_diagrams_naive(degree: int) -> list[ChordDiagram]:
    """Oracle: all (2n-1)!! pairings, canonicalised and deduplicated."""
    m = 2 * degree

    def pairings(free: list[int]) -> Iterator[dict[int, int]]:
        if not free:
            yield {}
            return
        a = free[0]
        for i in range(1, len(free)):
            b = free[i]
            rest = free[1:i] + free[i + 1:]
            for sub in pairings(rest):
                sub = dict(sub)
                sub[a], sub[b] = b, a
                yield sub

    seen = set()
    for pm in pairings(list(range(m))):
        seen.add(canonical_pairing(tuple(pm[x] for x in range(m))))
    return sorted((ChordDiagram(p) for p in seen), key=lambda d: d.word)
