"""gamma^0 comparison of two knots after (p, q)-cabling."""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..poly import LaurentPoly
from .diagram import LinkDiagram, cable
from .homfly import PLUS, Convention, SkeinBudgetExceeded, convention, gamma0


@dataclass
class MutantCableVerdict:
    p: int
    q: int
    convention: str
    crossings: tuple[int, int]
    gamma0: tuple[LaurentPoly | None, LaurentPoly | None]
    seconds: tuple[float | None, float | None]
    status: str  # "equal", "unequal" or "budget-exceeded"

    @property
    def equal(self) -> bool:
        return self.status == "equal"

    def to_json(self) -> dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "convention": self.convention,
            "crossings": list(self.crossings),
            "gamma0": [None if g is None else str(g) for g in self.gamma0],
            "gamma0_terms": [None if g is None else g.to_terms() for g in self.gamma0],
            "seconds": [None if s is None else round(s, 3) for s in self.seconds],
            "verdict": self.status,
        }


def verify_mutant_cable(
    k1: LinkDiagram,
    k2: LinkDiagram,
    p: int,
    q: int,
    conv: "str | Convention" = PLUS,
    budget_secs: float | None = None,
) -> MutantCableVerdict:
    """gamma^0 of the (p, q)-cables of both knots.

    ``budget_secs`` applies to each cable separately. When it runs out the
    verdict is ``budget-exceeded`` and the values computed so far are kept.
    """
    conv = convention(conv)
    cables = (cable(k1, p, q), cable(k2, p, q))
    values: list[LaurentPoly | None] = [None, None]
    secs: list[float | None] = [None, None]
    status = None
    for i, c in enumerate(cables):
        t = time.perf_counter()
        try:
            values[i] = gamma0(c, conv, budget_secs)
        except SkeinBudgetExceeded:
            status = "budget-exceeded"
            break
        finally:
            secs[i] = time.perf_counter() - t
    if status is None:
        status = "equal" if values[0] == values[1] else "unequal"
    return MutantCableVerdict(
        p, q, conv.name, (len(cables[0].crossings), len(cables[1].crossings)),
        (values[0], values[1]), (secs[0], secs[1]), status,
    )


__all__ = ["MutantCableVerdict", "verify_mutant_cable"]
