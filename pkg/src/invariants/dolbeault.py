"""Intersection E-polynomials of Higgs moduli spaces, in u and v."""
from fractions import Fraction
from typing import Optional

from loguru import logger

from src.algebra.laurent import ONE, T, U, V, LaurentPoly
from src.algebra.operations import exact_div, substitute, sum_over_denominator
from src.dt.assembly import assemble_ie
from src.exceptions.custom import IdentityMismatchError
from src.invariants.checks import require_integral, resolve_torsion, torsion_note
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec, Side
from src.invariants.transforms import gl1_factor
from src.strata.splits import e_tstar_jac_split
from src.utils.decorators import measure_time

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _minus_part(k: int) -> LaurentPoly:
    return ((1 - U) * (1 - V)) ** k


def _plus_part(k: int) -> LaurentPoly:
    return ((1 + U) * (1 + V)) ** k


@measure_time
def e_dol_sm_sl2(g: int, torsion: Optional[int] = None) -> LaurentPoly:
    """E-polynomial of the smooth locus of M_Dol(C, SL2).

    Transcribed from the literature; trusted only through the purity check
    against the intersection Poincare polynomial.
    """
    n = 2 ** (2 * g) if torsion is None else torsion
    w = U * V
    top = w ** (3 * g - 3)
    a, b = _minus_part(g), _plus_part(g)
    a1, b1 = _minus_part(g - 1), _plus_part(g - 1)
    one_minus, one_plus, one_minus_sq = 1 - w, 1 + w, 1 - w**2
    double_pole = one_minus * one_minus_sq

    terms = [
        (top * ((1 - U**2 * V) ** g * (1 - U * V**2) ** g - w ** (g + 1) * a), double_pole),
        (-HALF * top * a, one_minus),
        (-HALF * top * b, one_plus),
        (-HALF * w**g * (a + b) * (1 - w ** (g - 1)) * (1 - w**g), one_minus_sq),
        (-HALF * w ** (g + 1) * (a - b) * (1 - w ** (g - 2)) * (1 - w ** (g - 1)), one_minus_sq),
        (-(w ** (2 * g - 1)) * (1 - w ** (g - 2)) * (a - n) * (1 - w ** (g - 1)), one_minus),
        (-n * w ** (2 * g - 2) * (1 - w ** (g - 1)) * (1 - w**g), one_minus),
        (Fraction(n, 2) * top * (a1 + b1 - 2 * w ** (g - 1)), ONE),
    ]
    lead = -top * (1 - U) * (1 - V)
    terms += [
        (QUARTER * lead * b1, one_plus),
        (-lead * w ** (g - 1) * a1, double_pole),
        (-Fraction(g - 1, 2) * lead * (U + V - 2 * w) * _minus_part(g - 2), one_minus),
        (-Fraction(4 * g - 7, 4) * lead * a1, one_minus),
        (HALF * lead * w * a1, (w - 1) ** 2),
    ]
    return sum_over_denominator(terms, one_minus**2 * one_plus)


def _ie_dol_closed_form(g: int, e_sm: LaurentPoly, n: int) -> LaurentPoly:
    w = U * V
    a, b = _minus_part(g), _plus_part(g)
    # (1 - w^{2g-4}) / (1 - w^2) absorbs both denominators
    middle = HALF * w ** (g + 1) * exact_div(1 - w ** (2 * g - 4), 1 - w**2) * (a * (1 + w) - b * (1 - w))
    return e_sm + HALF * w**g * (a + b) + middle + n * w ** (2 * g - 2)


def ie_dol_sl2(g: int, e_sm: Optional[LaurentPoly] = None, torsion_N: Optional[int] = None) -> InvariantResult:
    """IE(M_Dol(C, SL2)) by its closed form, cross-checked with the assembly formula."""
    n = 2 ** (2 * g) if torsion_N is None else torsion_N
    smooth = e_dol_sm_sl2(g, n) if e_sm is None else e_sm
    closed = _ie_dol_closed_form(g, smooth, n)

    sigma = e_tstar_jac_split(g)
    assembled = assemble_ie(smooth + sigma.plus, sigma, LaurentPoly.const(n), g)
    if closed != assembled:
        raise IdentityMismatchError(f"IE_Dol(SL2, g={g}) closed form and assembly disagree", closed, assembled)

    group = Group.PGL2 if n == 1 else Group.SL2
    require_integral(closed, f"IE_Dol(g={g}, N={n})")
    return InvariantResult(
        spec=ModuliSpec(group=group, side=Side.DOLBEAULT, genus=g),
        kind=InvariantKind.IE,
        poly=closed,
        torsion_parameter_used=n,
        provenance="E(M_Dol^sm) + singular-locus corrections" + torsion_note(g, n),
    )


def ie_dol(group: Group, g: int) -> InvariantResult:
    """IE(M_Dol(C, G)) for G = SL2, PGL2, GL2."""
    n = resolve_torsion(group, g, None)
    result = ie_dol_sl2(g, torsion_N=n)
    if group is not Group.GL2:
        return result
    factor = gl1_factor(InvariantKind.IE, Side.DOLBEAULT, g)
    logger.debug(f"IE_Dol(GL2, g={g}) from the PGL2 value times E(T*Jac)")
    return InvariantResult(
        spec=ModuliSpec(group=Group.GL2, side=Side.DOLBEAULT, genus=g),
        kind=InvariantKind.IE,
        poly=factor * result.poly,
        torsion_parameter_used=1,
        provenance="E(T*Jac) * IE_Dol(PGL2)",
    )


def diagonal_ie(p: LaurentPoly) -> LaurentPoly:
    """Specialize u = v = s; s is written as t."""
    return substitute(p, {"u": T, "v": T})
