"""Intersection E-polynomials of character varieties and intersection Euler characteristics."""
from fractions import Fraction
from typing import Optional

from loguru import logger

from src.algebra.laurent import Q, LaurentPoly
from src.exceptions.custom import ConsistencyFailureError, IdentityMismatchError, UnsupportedGroupError
from src.invariants.checks import require_integral, require_palindromic, resolve_torsion, torsion_note
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec, Side
from src.invariants.transforms import gl1_factor

HALF = Fraction(1, 2)


def ie_betti_formula(g: int, torsion: int) -> LaurentPoly:
    """IE(M_B(C, SL2)) with 2^{2g} replaced by the torsion parameter N."""
    m = 2 * g - 2
    plus = (Q + 1) ** m
    minus = (Q - 1) ** m
    return (
        (Q**m + 1) * (Q**2 - 1) ** m
        + HALF * Q ** (2 * g - 3) * (Q**2 + 1) * (plus - minus)
        + Fraction(torsion, 2) * Q**m * (plus + minus)
    )


def ie_betti_pgl2_factored(g: int) -> LaurentPoly:
    m = 2 * g - 2
    return (
        (Q**m + 1) * (Q**2 - 1) ** m
        + HALF * Q ** (2 * g - 3) * (Q**2 + Q + 1) * (Q + 1) ** m
        - HALF * Q ** (2 * g - 3) * (Q**2 - Q + 1) * (Q - 1) ** m
    )


def ie_betti(group: Group, g: int, torsion_N: Optional[int] = None) -> InvariantResult:
    """Intersection E-polynomial of M_B(C, G) in q."""
    n = resolve_torsion(group, g, torsion_N)
    spec = ModuliSpec(group=group, side=Side.BETTI, genus=g)
    poly = ie_betti_formula(g, n)
    provenance = "IE_B closed form" + torsion_note(g, n)

    if group is not Group.SL2:
        factored = ie_betti_pgl2_factored(g)
        if poly != factored:
            raise IdentityMismatchError(f"PGL2 intersection E-polynomial forms disagree for g={g}", poly, factored)
    if group is Group.GL2:
        poly = gl1_factor(InvariantKind.IE, Side.BETTI, g) * poly
        provenance = "(q-1)^{2g} * IE_B(PGL2)"

    label = f"IE_B({group.value}, g={g})"
    require_integral(poly, label)
    require_palindromic(poly, Fraction(spec.dimension, 2), label)
    logger.debug(f"{label} = {poly}")
    return InvariantResult(spec=spec, kind=InvariantKind.IE, poly=poly, torsion_parameter_used=n, provenance=provenance)


def euler_closed_form(group: Group, g: int) -> int:
    if group is Group.SL2:
        return 2 ** (2 * g - 2) * (2 ** (2 * g - 1) + 1)
    if group is Group.PGL2:
        return 3 * 2 ** (2 * g - 3)
    raise UnsupportedGroupError(f"No intersection Euler characteristic formula for {group.value}")


def euler_char(group: Group, g: int) -> int:
    """Intersection Euler characteristic, checked against IE_B at q = 1."""
    closed = euler_closed_form(group, g)
    evaluated = ie_betti(group, g).poly.evaluate(q=1)
    if evaluated != closed:
        raise ConsistencyFailureError(f"I-chi({group.value}, g={g}): closed form {closed} but IE_B(1) = {evaluated}")
    return closed
