"""Sparse multivariate Laurent polynomials with exact coefficients.

Coefficients are ``int`` or :class:`fractions.Fraction`; nothing here ever
touches floating point. A polynomial carries its variable names so that
serialized output is self-describing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
Exponent = tuple[int, ...]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class LaurentPoly:
    """Immutable sparse Laurent polynomial in a fixed tuple of variables."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exponent, Coeff] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        clean: dict[Exponent, Coeff] = {}
        if terms:
            k = len(self.variables)
            for e, c in terms.items():
                if c == 0:
                    continue
                e = tuple(e)
                if len(e) != k:
                    raise ValueError(f"exponent {e} does not match variables {self.variables}")
                clean[e] = _norm(c)
        self.terms: dict[Exponent, Coeff] = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------------
    @classmethod
    def constant(cls, variables: Iterable[str], c: Coeff) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponent: Exponent, c: Coeff = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exponent): c})

    @classmethod
    def var(cls, variables: Iterable[str], name: str, power: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): 1})

    # -- basic protocol -----------------------------------------------------------
    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(-x * -n for x in e): Fraction(1, 1) / c ** (-n)})
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" if k > 0 else f"{v}^({k})"
                for v, k in zip(self.variables, e)
                if k != 0
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- queries ------------------------------------------------------------------
    def coefficient(self, exponent: Exponent) -> Coeff:
        return self.terms.get(tuple(exponent), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def degree_range(self, var: str) -> tuple[int, int]:
        i = self.variables.index(var)
        exps = [e[i] for e in self.terms]
        if not exps:
            raise ValueError("zero polynomial has no degree")
        return min(exps), max(exps)

    def shift(self, var: str, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        i = self.variables.index(var)
        return LaurentPoly(
            self.variables,
            {e[:i] + (e[i] + k,) + e[i + 1:]: c for e, c in self.terms.items()},
        )

    def substitute(self, var: str, value: "LaurentPoly | Coeff") -> "LaurentPoly":
        """Replace ``var`` by ``value`` (a polynomial over the remaining variables or a number)."""
        i = self.variables.index(var)
        rest = self.variables[:i] + self.variables[i + 1:]
        if isinstance(value, LaurentPoly):
            if value.variables != rest:
                raise ValueError("substituted value must live in the remaining variables")
            val = value
        else:
            val = LaurentPoly.constant(rest, value)
        out = LaurentPoly(rest)
        cache: dict[int, LaurentPoly] = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in cache:
                cache[k] = val ** k
            out = out + cache[k] * LaurentPoly.monomial(rest, e[:i] + e[i + 1:], c)
        return out

    def to_terms(self) -> list[dict[str, object]]:
        """Serializable sparse term list; coefficients as strings."""
        return [
            {"exponents": dict(zip(self.variables, e)), "coefficient": str(self.terms[e])}
            for e in sorted(self.terms)
        ]

    @classmethod
    def from_terms(cls, variables: Iterable[str], items: Iterable[Mapping[str, object]]) -> "LaurentPoly":
        variables = tuple(variables)
        terms: dict[Exponent, Coeff] = {}
        for item in items:
            exps = item["exponents"]
            assert isinstance(exps, Mapping)
            e = tuple(int(exps.get(v, 0)) for v in variables)
            terms[e] = _norm(Fraction(str(item["coefficient"])))
        return cls(variables, terms)


def univariate(var: str, coeffs: Mapping[int, Coeff]) -> LaurentPoly:
    return LaurentPoly((var,), {(k,): c for k, c in coeffs.items()})
