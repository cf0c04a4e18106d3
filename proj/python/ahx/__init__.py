"""Artin-Hasse exponentials and p-supported multiplicativity defects.

Thin Python surface over the C++ core: exact mod-p / p-adic series
arithmetic, the defect-support check, synthesis and decomposition of the
characterized series, exhaustive small-case enumeration, and the full
command-line interface (``run``) executed in-process.
"""

from ahx._core import (
    artin_hasse_modp,
    check_defect_support,
    decompose,
    enumerate_small,
    logderiv_constant,
    run,
    synthesize,
)

__all__ = [
    "artin_hasse_modp",
    "check_defect_support",
    "decompose",
    "enumerate_small",
    "logderiv_constant",
    "run",
    "synthesize",
]
