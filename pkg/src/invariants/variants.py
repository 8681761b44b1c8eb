"""Variant parts of IE and IP under the action of the 2-torsion of the Jacobian."""
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from src.algebra.laurent import Q, T, U, V, LaurentPoly
from src.algebra.operations import substitute
from src.invariants.checks import require_integral, require_palindromic


class VariantPolys(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    genus: int
    ie_b_var: LaurentPoly
    ie_dol_var: LaurentPoly
    ip_var: LaurentPoly


def _prefactor(g: int) -> Fraction:
    return Fraction(2 ** (2 * g) - 1, 2)


def ie_b_var(g: int) -> LaurentPoly:
    return _prefactor(g) * Q ** (2 * g - 2) * ((Q + 1) ** (2 * g - 2) + (Q - 1) ** (2 * g - 2))


def ie_dol_var(g: int) -> LaurentPoly:
    plus = ((U + 1) * (V + 1)) ** (g - 1)
    minus = ((U - 1) * (V - 1)) ** (g - 1)
    return _prefactor(g) * (U * V) ** (3 * g - 3) * (plus + minus)


def ip_var(g: int) -> LaurentPoly:
    return _prefactor(g) * T ** (4 * g - 4) * ((T + 1) ** (2 * g - 2) + (T - 1) ** (2 * g - 2))


def variant_polys(g: int) -> VariantPolys:
    """The three variant polynomials; the shifted Betti and diagonal Dolbeault ones are palindromic of degree 2g-2."""
    record = VariantPolys(genus=g, ie_b_var=ie_b_var(g), ie_dol_var=ie_dol_var(g), ip_var=ip_var(g))
    for name, poly in (("ie_b_var", record.ie_b_var), ("ie_dol_var", record.ie_dol_var), ("ip_var", record.ip_var)):
        require_integral(poly, f"{name}(g={g})")

    shifted = record.ie_b_var * Q ** (-2 * g + 2)
    require_palindromic(shifted, g - 1, f"q^(2-2g) IE_B^var(g={g})")
    diagonal = substitute(record.ie_dol_var * (U * V) ** (-3 * g + 3), {"u": Q, "v": Q})
    require_palindromic(diagonal, g - 1, f"(uv)^(3-3g) IE_Dol^var(g={g}) at u = v = q")
    return record
