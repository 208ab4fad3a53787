"""Finite rational combinations of chord diagrams.

The product is the connected sum, cut at position 0 of each stored
(canonical) representative. Modulo 4T this is independent of the cut point;
on raw diagrams it is a fixed convention.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .chords import ChordDiagram, ChordParseError, parse, word_of, pairing_from_word

Number = Union[int, Fraction]

STRUT = ChordDiagram.from_pairing((1, 0))


def connect_sum(d1: ChordDiagram, d2: ChordDiagram) -> ChordDiagram:
    m1 = len(d1.pairing)
    pairing = list(d1.pairing) + [y + m1 for y in d2.pairing]
    return ChordDiagram.from_pairing(pairing)


@dataclass(frozen=True)
class ChordSeries:
    """Sparse combination ``sum c_D * D`` truncated above ``max_degree``.

    ``truncated`` records whether any term was ever dropped by the cap.
    """

    terms: Mapping[ChordDiagram, Fraction] = field(default_factory=dict)
    max_degree: int = 8
    truncated: bool = False

    def __post_init__(self) -> None:
        clean: dict[ChordDiagram, Fraction] = {}
        dropped = self.truncated
        for d, c in self.terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if d.degree > self.max_degree:
                dropped = True
                continue
            clean[d] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "truncated", dropped)

    @classmethod
    def unit(cls, max_degree: int = 8) -> "ChordSeries":
        return cls({ChordDiagram.empty(): Fraction(1)}, max_degree)

    @classmethod
    def of(cls, d: ChordDiagram, coef: Number = 1, max_degree: int = 8) -> "ChordSeries":
        return cls({d: Fraction(coef)}, max_degree)

    def _cap(self, other: "ChordSeries") -> int:
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: "ChordSeries") -> "ChordSeries":
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return ChordSeries(out, self._cap(other), self.truncated or other.truncated)

    def __neg__(self) -> "ChordSeries":
        return ChordSeries({d: -c for d, c in self.terms.items()}, self.max_degree, self.truncated)

    def __sub__(self, other: "ChordSeries") -> "ChordSeries":
        return self + (-other)

    def scale(self, k: Number) -> "ChordSeries":
        return ChordSeries({d: c * k for d, c in self.terms.items()}, self.max_degree, self.truncated)

    def __mul__(self, other: "ChordSeries | int | Fraction") -> "ChordSeries":
        if not isinstance(other, ChordSeries):
            return self.scale(other)
        cap = self._cap(other)
        out: dict[ChordDiagram, Fraction] = {}
        dropped = self.truncated or other.truncated
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                if d1.degree + d2.degree > cap:
                    dropped = True
                    continue
                d = connect_sum(d1, d2)
                out[d] = out.get(d, 0) + c1 * c2
        return ChordSeries(out, cap, dropped)

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChordSeries):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, d: ChordDiagram) -> Fraction:
        return self.terms.get(d, Fraction(0))

    def degree_part(self, k: int) -> "ChordSeries":
        return ChordSeries({d: c for d, c in self.terms.items() if d.degree == k}, self.max_degree)

    def truncate(self, cap: int) -> "ChordSeries":
        return ChordSeries(self.terms, min(cap, self.max_degree), self.truncated)

    def map_linear(self, f) -> "ChordSeries":
        """Apply a linear map given on diagrams (``f(D) -> ChordSeries``)."""
        out = ChordSeries({}, self.max_degree, self.truncated)
        for d, c in self.terms.items():
            out = out + f(d).scale(c)
        return out

    def to_json(self) -> list[dict[str, object]]:
        return [
            {"diagram": str(d), "numerator": str(c.numerator), "denominator": str(c.denominator)}
            for d, c in sorted(self.terms.items(), key=lambda kv: (kv[0].degree, kv[0].word))
        ]

    @classmethod
    def from_json(cls, items: Iterable[Mapping[str, object]], max_degree: int = 8) -> "ChordSeries":
        return cls(
            {parse(str(it["diagram"])): Fraction(int(str(it["numerator"])), int(str(it["denominator"]))) for it in items},
            max_degree,
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{d}]" for d, c in sorted(self.terms.items(), key=lambda kv: (kv[0].degree, kv[0].word)))


def strut_power(k: int) -> ChordDiagram:
    """``k`` parallel struts, i.e. the k-fold connected sum of the strut."""
    return ChordDiagram.from_pairing(pairing_from_word([i // 2 for i in range(2 * k)]))


def exp_strut(coef: Number, max_degree: int) -> ChordSeries:
    """``sum_{k <= max_degree} coef^k / k! * strut^{#k}``."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    coef = Fraction(coef)
    return ChordSeries(
        {strut_power(k): coef**k / math.factorial(k) for k in range(max_degree + 1)},
        max_degree,
    )


# -- 4T ---------------------------------------------------------------------------------


class FrameError(ValueError):
    pass


def generate_4T(
    frame: ChordDiagram | Sequence[int], fixed_chord: int, mobile_leg: int
) -> list[tuple[int, ChordDiagram]]:
    """The signed four-term combination for a marked frame.

    ``frame`` is a diagram (or raw pairing) in which chord ``fixed_chord``
    (index by order of first leg) is held fixed and the leg at position
    ``mobile_leg`` belongs to a different chord and sits next to a leg of
    the fixed chord. Returns ``[(+1, D1), (-1, D2), (-1, D3), (+1, D4)]``
    where the mobile leg is placed just before / just after the first leg
    of the fixed chord (D1 / D2) and just after / just before its second leg
    (D3 / D4); the relation asserts ``(D1 - D2) - (D3 - D4) = 0``.
    """
    pairing = frame.pairing if isinstance(frame, ChordDiagram) else tuple(frame)
    m = len(pairing)
    word = list(word_of(pairing))
    n = m // 2
    if not 0 <= fixed_chord < n:
        raise FrameError(f"fixed chord {fixed_chord} out of range")
    if not 0 <= mobile_leg < m:
        raise FrameError(f"mobile leg {mobile_leg} out of range")
    t_label = fixed_chord + 1
    m_label = word[mobile_leg]
    if m_label == t_label:
        raise FrameError("mobile leg belongs to the fixed chord")
    if t_label not in (word[(mobile_leg - 1) % m], word[(mobile_leg + 1) % m]):
        raise FrameError("mobile leg is not adjacent to a leg of the fixed chord")
    rest = word[:mobile_leg] + word[mobile_leg + 1:]
    ta, tb = [i for i, s in enumerate(rest) if s == t_label]

    def place(idx: int) -> ChordDiagram:
        w = rest[:idx] + [m_label] + rest[idx:]
        return ChordDiagram.from_pairing(pairing_from_word(w))

    return [(1, place(ta)), (-1, place(ta + 1)), (-1, place(tb + 1)), (1, place(tb))]


def random_4T_frame(rng: random.Random, min_degree: int = 2, max_degree: int = 6) -> tuple[tuple[int, ...], int, int]:
    """A random raw pairing with a valid (fixed chord, mobile leg) marking."""
    n = rng.randint(min_degree, max_degree)
    labels = [i for i in range(n) for _ in range(2)]
    rng.shuffle(labels)
    fixed = rng.randrange(n)
    other = rng.choice([i for i in range(n) if i != fixed])
    # move one leg of `other` next to a leg of `fixed`
    legs = [i for i, s in enumerate(labels) if s == other]
    labels.pop(rng.choice(legs))
    tpos = rng.choice([i for i, s in enumerate(labels) if s == fixed])
    labels.insert(tpos + rng.randint(0, 1), other)
    pairing = pairing_from_word(labels)
    word = word_of(pairing)
    # translate chord identities to first-occurrence indices
    t_idx = word[labels.index(fixed)] - 1
    m_pos = [i for i, s in enumerate(labels) if s == other and fixed in (labels[(i - 1) % len(labels)], labels[(i + 1) % len(labels)])][0]
    return pairing, t_idx, m_pos


__all__ = [
    "STRUT",
    "ChordSeries",
    "ChordParseError",
    "FrameError",
    "connect_sum",
    "exp_strut",
    "generate_4T",
    "random_4T_frame",
    "strut_power",
]
