"""HOMFLY-PT polynomial and its lowest-z coefficient gamma^0 by skein recursion.

A convention is the pair ``(x_plus, x_minus)`` in ``x_plus P(L+) + x_minus P(L-) = z P(L0)``,
normalized by ``P(unknot) = 1``. Both are signed monomials in ``a``.

The recursion switches the first crossing met from below while walking the
components from their base points; once a diagram is descending it is an
unlink. Intermediate diagrams are simplified (kinks, bigons) and memoized on
a relabelled key.
"""

from __future__ import annotations

import os
import sys
import time
from dataclasses import dataclass
from typing import Callable

from ..poly import LaurentPoly
from .diagram import LinkDiagram

A = ("a",)
AZ = ("a", "z")


@dataclass(frozen=True)
class Convention:
    name: str
    plus: tuple[int, int]   # (coefficient sign, power of a) of x_plus
    minus: tuple[int, int]  # same for x_minus

    def x_plus(self, vars_=AZ) -> LaurentPoly:
        return _mono(vars_, *self.plus)

    def x_minus(self, vars_=AZ) -> LaurentPoly:
        return _mono(vars_, *self.minus)


def _mono(vars_: tuple[str, ...], c: int, k: int) -> LaurentPoly:
    e = [0] * len(vars_)
    e[0] = k
    return LaurentPoly(vars_, {tuple(e): c})


#: ``a^-1 P(L+) + a P(L-) = z P(L0)``: links come out with (a + 1/a)/z per split component.
PLUS = Convention("plus", (1, -1), (1, 1))
#: ``a P(L+) - a^-1 P(L-) = z P(L0)``: the sl_N specialization ``a = q^(N/2)``.
STANDARD = Convention("standard", (1, 1), (-1, -1))

CONVENTIONS = {c.name: c for c in (PLUS, STANDARD)}


def convention(name: "str | Convention") -> Convention:
    if isinstance(name, Convention):
        return name
    try:
        return CONVENTIONS[name]
    except KeyError:
        raise ValueError(f"unknown skein convention {name!r}; choose from {sorted(CONVENTIONS)}") from None


class SkeinBudgetExceeded(RuntimeError):
    pass


class _Deadline:
    def __init__(self, seconds: float | None):
        self.end = None if seconds is None else time.monotonic() + seconds
        self.calls = 0

    def check(self) -> None:
        self.calls += 1
        if self.end is not None and self.calls % 64 == 1 and time.monotonic() > self.end:
            raise SkeinBudgetExceeded("skein recursion exceeded its time budget")


def _budget(seconds: float | None) -> float | None:
    if seconds is not None:
        return seconds
    env = os.environ.get("GAMMA0_BUDGET_SECS")
    return float(env) if env else None


def _with_recursion_room(fn: Callable[[], LaurentPoly]) -> LaurentPoly:
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20000))
    try:
        return fn()
    finally:
        sys.setrecursionlimit(old)


# -- HOMFLY ---------------------------------------------------------------------------------


def unlink_homfly(r: int, conv: Convention = PLUS) -> LaurentPoly:
    """``((x_plus + x_minus) / z)^(r - 1)``."""
    loop = (conv.x_plus() + conv.x_minus()) * LaurentPoly.monomial(AZ, (0, -1))
    return loop ** (r - 1)


def homfly(d: LinkDiagram, conv: "str | Convention" = PLUS, budget_secs: float | None = None) -> LaurentPoly:
    conv = convention(conv)
    xp, xm = conv.x_plus(), conv.x_minus()
    xp_inv, xm_inv = xp ** -1, xm ** -1
    z = LaurentPoly.monomial(AZ, (0, 1))
    memo: dict[tuple, LaurentPoly] = {}
    clock = _Deadline(_budget(budget_secs))

    def rec(diag: LinkDiagram) -> LaurentPoly:
        clock.check()
        diag = diag.simplify().relabeled()
        key = diag.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        idx = diag.first_nondescending()
        if idx is None:
            val = unlink_homfly(diag.components, conv)
        else:
            other = rec(diag.switch(idx))
            smooth = rec(diag.smooth(idx))
            if diag.crossings[idx].sign > 0:
                val = (z * smooth - xm * other) * xp_inv
            else:
                val = (z * smooth - xp * other) * xm_inv
        memo[key] = val
        return val

    return _with_recursion_room(lambda: rec(d))


def gamma_coefficients(p: LaurentPoly, components: int) -> dict[int, LaurentPoly]:
    """``gamma^i(a)`` with ``P = (a z)^(1 - r) * sum_i gamma^i(a) z^(2i)``."""
    r = components
    out: dict[int, dict[tuple[int], int]] = {}
    for (k, l), c in p.terms.items():
        e = l + r - 1
        if e < 0 or e % 2:
            raise ValueError(f"z-power {l} incompatible with {r} components")
        out.setdefault(e // 2, {})
        key = (k + r - 1,)
        out[e // 2][key] = out[e // 2].get(key, 0) + c
    return {i: LaurentPoly(A, t) for i, t in sorted(out.items()) if LaurentPoly(A, t)}


def gamma0_from_homfly(p: LaurentPoly, components: int) -> LaurentPoly:
    return gamma_coefficients(p, components).get(0, LaurentPoly(A))


# -- gamma^0 directly ---------------------------------------------------------------------


def gamma0(d: LinkDiagram, conv: "str | Convention" = PLUS, budget_secs: float | None = None) -> LaurentPoly:
    """Lowest z-coefficient, computed without the rest of the polynomial.

    Only z^0 terms survive once both sides of the skein relation are multiplied
    by ``(a z)^(r-1)``. At a self-crossing this gives
    ``x_plus g(L+) + x_minus g(L-) = a^-1 g(L0)``; at a crossing between two
    components it gives ``x_plus g(L+) + x_minus g(L-) = 0``. Iterating the
    second rule until a link splits gives the closed form
    ``g(L) = rho^lk * mu^(r-1) * prod g(K_i)``, with ``rho = -x_minus/x_plus``,
    ``mu = a (x_plus + x_minus)`` and lk the total pairwise linking number.
    """
    conv = convention(conv)
    xp, xm = conv.x_plus(A), conv.x_minus(A)
    xp_inv, xm_inv = xp ** -1, xm ** -1
    a = LaurentPoly.monomial(A, (1,))
    a_inv = LaurentPoly.monomial(A, (-1,))
    rho = -(xm * xp_inv)
    mu = a * (xp + xm)
    one = LaurentPoly.constant(A, 1)
    memo: dict[tuple, LaurentPoly] = {}
    clock = _Deadline(_budget(budget_secs))

    def link(diag: LinkDiagram) -> LaurentPoly:
        r = diag.components
        if r == 1:
            return knot(diag if diag.crossings else LinkDiagram((), 1))
        val = mu ** (r - 1)
        lk = diag.linking_sum()
        if lk:
            val = val * rho ** lk
        for i in range(len(diag.edge_components)):
            val = val * knot(diag.component_diagram(i))
        return val

    def knot(diag: LinkDiagram) -> LaurentPoly:
        clock.check()
        diag = diag.simplify().relabeled()
        if not diag.crossings:
            return one
        key = diag.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        idx = diag.first_nondescending()
        if idx is None:
            val = one
        else:
            other = knot(diag.switch(idx))
            smooth = link(diag.smooth(idx))
            if diag.crossings[idx].sign > 0:
                val = (a_inv * smooth - xm * other) * xp_inv
            else:
                val = (a_inv * smooth - xp * other) * xm_inv
        memo[key] = val
        return val

    return _with_recursion_room(lambda: link(d))


# -- conversions ----------------------------------------------------------------------------


def from_knotinfo(terms: list[list[int]], conv: "str | Convention" = PLUS) -> LaurentPoly:
    """Convert a KnotInfo (v, z) HOMFLY polynomial into the chosen convention.

    KnotInfo uses ``v^-1 P(L+) - v P(L-) = z P(L0)``. Substituting ``v = i a``,
    ``z -> -i z`` gives the ``plus`` convention; ``v = a^-1`` gives ``standard``.
    For knots only even powers occur, so the factors of i become signs.
    """
    conv = convention(conv)
    out: dict[tuple[int, int], int] = {}
    for ve, ze, c in terms:
        if conv.name == "plus":
            if ve % 2 or ze % 2:
                raise ValueError("odd exponents: not a knot polynomial")
            # i^ve * (-i)^ze with both exponents even
            key, c = (ve, ze), (-1) ** ((ve + ze) // 2) * c
        else:
            key = (-ve, ze)
        out[key] = out.get(key, 0) + c
    return LaurentPoly(AZ, out)


def mirror_poly(p: LaurentPoly, conv: "str | Convention" = PLUS) -> LaurentPoly:
    """HOMFLY of the mirror image: ``a -> 1/a`` (and ``z -> -z`` in ``standard``)."""
    conv = convention(conv)
    zsign = -1 if conv.plus[0] != conv.minus[0] else 1
    return LaurentPoly(AZ, {(-k, l): c * zsign**l for (k, l), c in p.terms.items()})


__all__ = [
    "CONVENTIONS",
    "Convention",
    "PLUS",
    "STANDARD",
    "SkeinBudgetExceeded",
    "convention",
    "from_knotinfo",
    "gamma0",
    "gamma0_from_homfly",
    "gamma_coefficients",
    "homfly",
    "mirror_poly",
    "unlink_homfly",
]
