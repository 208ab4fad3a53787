"""The sl_N weight system and its (N, h) expansion.

``weight_sl`` evaluates the state sum over chord subsets: every chord is
either replaced by an untwisted band (``+1``) or deleted with a factor
``-1/N`` (``-1``); a state contributes ``N^(boundary circles)`` times those
factors. The result is a Laurent polynomial in N carrying an implicit
``h^deg``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import _kernels
from .chords import ChordDiagram, boundary_components, genus
from .poly import LaurentPoly

DEFAULT_STATE_CAP = 14
DEFAULT_ORDER = 8


class BudgetExceeded(RuntimeError):
    pass


class SeriesError(ArithmeticError):
    pass


@dataclass(frozen=True)
class NWeight:
    """``poly(N) * h**h_degree`` with integer coefficients."""

    poly: LaurentPoly
    h_degree: int

    def __post_init__(self) -> None:
        if self.poly.variables != ("N",):
            raise ValueError("NWeight polynomial must be in N")
        if self.poly and self.poly.degree_range("N")[1] > self.h_degree + 1:
            raise ValueError("N-degree exceeds h-degree + 1")

    @classmethod
    def zero(cls, h_degree: int) -> "NWeight":
        return cls(LaurentPoly(("N",)), h_degree)

    def coefficient(self, k: int) -> int:
        return int(self.poly.coefficient((k,)))

    def max_exponent(self) -> int | None:
        return self.poly.degree_range("N")[1] if self.poly else None

    def __add__(self, other: "NWeight") -> "NWeight":
        if self.h_degree != other.h_degree:
            raise ValueError("cannot add weights of different h-degree")
        return NWeight(self.poly + other.poly, self.h_degree)

    def scale(self, k: int) -> "NWeight":
        return NWeight(self.poly * k, self.h_degree)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        h = "" if self.h_degree == 0 else f" * h^{self.h_degree}"
        body = str(self.poly)
        return f"({body}){h}" if h and len(self.poly.terms) > 1 else f"{body}{h}"

    def to_json(self) -> dict[str, object]:
        return {"variables": ["N", "h"], "h_degree": self.h_degree, "terms": self.poly.to_terms()}


def _n_poly(terms: Mapping[int, int]) -> LaurentPoly:
    return LaurentPoly(("N",), {(k,): v for k, v in terms.items()})


def weight_sl(d: ChordDiagram, cap: int = DEFAULT_STATE_CAP) -> NWeight:
    """Exact sl_N state sum (compiled kernel when available)."""
    if d.degree > cap:
        raise BudgetExceeded(
            f"degree {d.degree} needs 2^{d.degree} = {2 ** d.degree} states; cap is degree {cap}"
        )
    return NWeight(_n_poly(_kernels.sl_state_sum(d.pairing)), d.degree)


def weight_sl_reference(d: ChordDiagram) -> NWeight:
    """State sum via the generic boundary walk on every subset (oracle for the kernel)."""
    n = d.degree
    acc: dict[int, int] = {}
    for mask in range(1 << n):
        plus = [i for i in range(n) if mask >> i & 1]
        neg = n - len(plus)
        s = boundary_components(d, plus)
        acc[s - neg] = acc.get(s - neg, 0) + (-1) ** neg
    return NWeight(_n_poly(acc), n)


def weight_gamma0(d: ChordDiagram) -> NWeight:
    """``N^(deg+1) h^deg`` for genus-0 diagrams, else zero; no state sum."""
    if genus(d) == 0:
        return NWeight(_n_poly({d.degree + 1: 1}), d.degree)
    return NWeight.zero(d.degree)


def diagonal_project(w: NWeight) -> NWeight:
    """Keep only the ``N^(h_degree+1)`` coefficient."""
    k = w.h_degree + 1
    c = w.coefficient(k)
    return NWeight(_n_poly({k: c}), w.h_degree)


def weight_of_series(series, weight=weight_sl) -> dict[int, LaurentPoly]:
    """Apply a weight to a ChordSeries; result keyed by h-degree (rational N-polynomials)."""
    out: dict[int, LaurentPoly] = {}
    for d, c in series.terms.items():
        w = weight(d)
        out[w.h_degree] = out.get(w.h_degree, LaurentPoly(("N",))) + w.poly * c
    return {k: v for k, v in out.items() if v}


# -- (N, h) series ------------------------------------------------------------------------


class BivariateSeries:
    """Power series ``sum c[i, j] N^i h^j`` truncated above ``h^order``; ``i >= 0``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[tuple[int, int], Fraction] | None = None):
        self.order = order
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if c == 0 or j > order:
                continue
            if i < 0 or j < 0:
                raise SeriesError(f"negative exponent N^{i} h^{j} in a bivariate series")
            clean[(i, j)] = Fraction(c)
        self.coeffs = clean

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.coeffs.get(key, Fraction(0))

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariateSeries(min(self.order, other.order), out)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                if j1 + j2 <= order:
                    k = (i1 + i2, j1 + j2)
                    out[k] = out.get(k, 0) + c1 * c2
        return BivariateSeries(order, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def diagonal(self) -> list[Fraction]:
        """``c[j+1, j]`` for ``j = 0..order``."""
        return [self[(j + 1, j)] for j in range(self.order + 1)]

    def rows(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, c) for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    def __repr__(self) -> str:
        return f"BivariateSeries(order={self.order}, {len(self.coeffs)} terms)"


# univariate helpers on lists of Fractions (index = power)


def _u_series(order: int) -> list[Fraction]:
    """``(e^{h/2} - e^{-h/2}) / h`` to ``h^order``."""
    return [
        Fraction(1, 4 ** (k // 2) * math.factorial(k + 1)) if k % 2 == 0 else Fraction(0)
        for k in range(order + 1)
    ]


def _mul1(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def _inv1(a: Sequence[Fraction], order: int) -> list[Fraction]:
    if a[0] == 0:
        raise SeriesError("series with zero constant term is not invertible")
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / Fraction(a[0])
    for k in range(1, order + 1):
        s = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = -s / a[0]
    return out


def _pow1(a: Sequence[Fraction], e: int, order: int) -> list[Fraction]:
    base = list(a) if e >= 0 else _inv1(a, order)
    e = abs(e)
    result = [Fraction(1)] + [Fraction(0)] * order
    while e:
        if e & 1:
            result = _mul1(result, base, order)
        base = _mul1(base, base, order)
        e >>= 1
    return result


def sinhc_diagonal(order: int) -> list[Fraction]:
    """Diagonal factor of the unknot prefactor: ``sinh(x/2)/(x/2)`` in powers of ``x = N h``."""
    return _u_series(order)


def expand_homfly(p: LaurentPoly, components: int = 1, order: int = DEFAULT_ORDER) -> BivariateSeries:
    """Prefactor ``(a - 1/a) / z`` times ``P(a, z)`` at ``a = e^{Nh/2}``, ``z = e^{h/2} - e^{-h/2}``.

    Negative z-powers (links) are cleared by multiplying through by a power of
    h, expanding, and dividing back; leftover negative h-powers raise
    :class:`SeriesError`.
    """
    if p.variables != ("a", "z"):
        raise ValueError("expected a polynomial in (a, z)")
    if p.is_zero():
        return BivariateSeries(order)
    lmin = min(e[1] for e in p.terms)
    shift = max(0, -lmin)
    top = order + shift
    u = _u_series(top)
    upow: dict[int, list[Fraction]] = {}
    acc: dict[tuple[int, int], Fraction] = {}
    for (k, l), c in p.terms.items():
        # (e^{(k+1)x} - e^{(k-1)x}) / h with x = N h / 2: coefficient of N^j h^(j-1)
        num = {
            (j, j - 1): (Fraction(k + 1, 2) ** j - Fraction(k - 1, 2) ** j) / math.factorial(j)
            for j in range(1, top + 2)
        }
        if l - 1 not in upow:
            upow[l - 1] = _pow1(u, l - 1, top)
        up = upow[l - 1]
        hs = l + shift
        for (i, j), v in num.items():
            if v == 0:
                continue
            for t, w in enumerate(up):
                jj = j + hs + t
                if w and jj <= top:
                    acc[(i, jj)] = acc.get((i, jj), Fraction(0)) + c * v * w
    for (i, j), v in acc.items():
        if j < shift and v != 0:
            raise SeriesError(f"cannot clear denominators: residual N^{i} h^{j - shift}")
    return BivariateSeries(order, {(i, j - shift): v for (i, j), v in acc.items() if j >= shift})


def gamma_expansion(gamma: LaurentPoly, order: int = DEFAULT_ORDER) -> list[Fraction]:
    """``d_j`` with ``gamma(e^{x/2}) = sum d_j x^j`` (x stands for N h)."""
    if gamma.variables != ("a",):
        raise ValueError("expected a polynomial in a")
    return [
        sum((Fraction(c) * Fraction(k, 2) ** j for (k,), c in gamma.terms.items()), Fraction(0)) / math.factorial(j)
        for j in range(order + 1)
    ]


def gamma0_from_diagonal(s: BivariateSeries) -> list[Fraction]:
    """Recover the expansion of gamma^0(e^{Nh/2}) from the diagonal ``c[j+1, j]``.

    The unknot prefactor contributes its own diagonal ``sinh(x/2)/(x/2)``;
    it is divided out here.
    """
    return _mul1(s.diagonal(), _inv1(sinhc_diagonal(s.order), s.order), s.order)


__all__ = [
    "BivariateSeries",
    "BudgetExceeded",
    "NWeight",
    "SeriesError",
    "diagonal_project",
    "expand_homfly",
    "gamma0_from_diagonal",
    "gamma_expansion",
    "sinhc_diagonal",
    "weight_gamma0",
    "weight_of_series",
    "weight_sl",
    "weight_sl_reference",
]
