"""Passports of real Morse polynomials and the stratification of the
degree-5 and degree-6 coefficient spaces into constant-passport domains."""

from .morse import (
    CriticalPointSpec,
    Degenerate,
    NonMorse,
    PassportOutcome,
    Snake,
    construct,
    degenerate_pattern,
    from_critical_points,
    passport,
)
from .paps import count, delete_first, enumerate_paps, extend, is_pap, triangle_rows
from .polynomial import (
    IsolatedRoot,
    Poly,
    count_real_roots,
    discriminant,
    isolate_real_roots,
    refine_root,
    resultant,
)

__all__ = [
    "CriticalPointSpec", "Degenerate", "NonMorse", "PassportOutcome", "Snake",
    "construct", "degenerate_pattern", "from_critical_points", "passport",
    "count", "delete_first", "enumerate_paps", "extend", "is_pap", "triangle_rows",
    "IsolatedRoot", "Poly", "count_real_roots", "discriminant",
    "isolate_real_roots", "refine_root", "resultant",
]

__version__ = "0.1.0"
