"""Link diagrams, HOMFLY and gamma^0 skein engines, cables."""

from .diagram import (
    Crossing,
    LinkDiagram,
    PDError,
    add_kink,
    blackboard_parallel,
    braid_closure,
    cable,
    disjoint_union,
    kinked_unknot,
    load_pd,
    parse_pd,
    torus_braid,
    unknot,
    unlink,
)
from .homfly import (
    PLUS,
    STANDARD,
    Convention,
    SkeinBudgetExceeded,
    convention,
    from_knotinfo,
    gamma0,
    gamma0_from_homfly,
    gamma_coefficients,
    homfly,
    mirror_poly,
    unlink_homfly,
)
from .verify import MutantCableVerdict, verify_mutant_cable

__all__ = [
    "Convention",
    "Crossing",
    "LinkDiagram",
    "MutantCableVerdict",
    "PDError",
    "PLUS",
    "STANDARD",
    "SkeinBudgetExceeded",
    "add_kink",
    "blackboard_parallel",
    "braid_closure",
    "cable",
    "convention",
    "disjoint_union",
    "from_knotinfo",
    "gamma0",
    "gamma0_from_homfly",
    "gamma_coefficients",
    "homfly",
    "kinked_unknot",
    "load_pd",
    "mirror_poly",
    "parse_pd",
    "torus_braid",
    "unknot",
    "unlink",
    "unlink_homfly",
    "verify_mutant_cable",
]
