"""Post-conditions shared by the invariant formulas."""
from fractions import Fraction
from typing import Optional, Union

from loguru import logger

from src.algebra.laurent import LaurentPoly
from src.algebra.operations import palindrome_check
from src.exceptions.custom import NegativeCoefficientError, NonIntegerCoefficientError, PalindromyFailureError
from src.invariants.models import Group


def require_integral(p: LaurentPoly, label: str) -> LaurentPoly:
    bad = [(e, c) for e, c in p.items() if not isinstance(c, int)]
    if bad:
        raise NonIntegerCoefficientError(f"{label}: non-integer coefficients {bad[:3]}")
    return p


def require_nonnegative(p: LaurentPoly, label: str) -> LaurentPoly:
    require_integral(p, label)
    bad = [(e, c) for e, c in p.items() if c < 0]
    if bad:
        raise NegativeCoefficientError(f"{label}: negative Betti numbers {bad[:3]}")
    return p


def require_palindromic(p: LaurentPoly, center: Union[int, Fraction], label: str) -> LaurentPoly:
    if not palindrome_check(p, center):
        raise PalindromyFailureError(f"{label} is not palindromic about degree {center}")
    return p


def resolve_torsion(group: Group, g: int, torsion: Optional[int]) -> int:
    """The number of points of Omega the formulas see.

    SL2 defaults to 2^{2g}; PGL2 and GL2 (via PGL2) always use 1.
    """
    if group is Group.SL2:
        return 2 ** (2 * g) if torsion is None else torsion
    if torsion not in (None, 1):
        logger.warning(f"Torsion parameter {torsion} ignored for {group.value}; the invariant part uses 1")
    return 1


def torsion_note(g: int, torsion: int) -> str:
    """Provenance suffix recording a torsion parameter other than 2^{2g}."""
    return "" if torsion == 2 ** (2 * g) else f", N={torsion}"
