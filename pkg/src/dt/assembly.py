"""Intersection E-polynomial from the E-polynomial of M and its singular strata.

IE(M) = E(M) + (q^2 E(Sigma)^+ + q E(Sigma)^-) (1 - q^{2g-4}) / (1 - q^2) + E(Omega) q^{2g-2}

On the Dolbeault side q stands for uv in the correction factors.
"""
from fractions import Fraction
from typing import Optional

from loguru import logger

from src.algebra.laurent import Q, U, V, LaurentPoly
from src.algebra.operations import exact_div, substitute
from src.exceptions.custom import IdentityMismatchError
from src.invariants.models import Group, ModuliSpec, Side
from src.strata.incidence import incidence_poincare
from src.strata.models import SplitPoly
from src.strata.splits import e_sigma_omega

HALF = Fraction(1, 2)


def _q_alias(*polys: LaurentPoly) -> LaurentPoly:
    return U * V if any(p.uses_uv for p in polys) else Q


def _correction(sigma: SplitPoly, e_omega: LaurentPoly, g: int, q: LaurentPoly) -> LaurentPoly:
    factor = exact_div(1 - q ** (2 * g - 4), 1 - q**2)
    return (q**2 * sigma.plus + q * sigma.minus) * factor + e_omega * q ** (2 * g - 2)


def assemble_ie(e_m: LaurentPoly, sigma: SplitPoly, e_omega: LaurentPoly, g: int) -> LaurentPoly:
    q = _q_alias(e_m, sigma.plus, sigma.minus, e_omega)
    return e_m + _correction(sigma, e_omega, g, q)


def invert_ie(ie: LaurentPoly, sigma: SplitPoly, e_omega: LaurentPoly, g: int) -> LaurentPoly:
    """E(M) from IE(M); the exact inverse of ``assemble_ie``."""
    q = _q_alias(ie, sigma.plus, sigma.minus, e_omega)
    return ie - _correction(sigma, e_omega, g, q)


def side_variable(side: Side) -> LaurentPoly:
    """q on the Betti side, uv on the Dolbeault side."""
    return Q if side is Side.BETTI else U * V


def _e_d2_circ_closed_form(side: Side, g: int, torsion: int) -> LaurentPoly:
    q = side_variable(side)
    if side is Side.BETTI:
        a = (1 - Q) ** (2 * g)
        b = (1 + Q) ** (2 * g)
    else:
        a = q**g * ((1 - U) * (1 - V)) ** g
        b = q**g * ((1 + U) * (1 + V)) ** g
    bracket = a * exact_div(1 - q ** (2 * g - 3), 1 - q) + b * exact_div(1 + q ** (2 * g - 3), 1 + q)
    first = exact_div(1 - q ** (2 * g - 2), 1 - q) * bracket * HALF
    second = torsion * exact_div((1 - q ** (2 * g - 2)) ** 2, (1 - q**2) * (1 - q))
    return first - second


def e_d2_circ(side: Side, g: int, torsion: Optional[int] = None) -> LaurentPoly:
    """E of the open part of the second exceptional divisor.

    E(D2°) = E(I)^+ (E(Sigma)^+ - E(Omega)) + E(I)^- E(Sigma)^-, with the incidence
    variety in q (or uv) and E(Omega) the torsion parameter.
    """
    n = 2 ** (2 * g) if torsion is None else torsion
    sigma, _ = e_sigma_omega(ModuliSpec(group=Group.SL2, side=side, genus=g))
    incidence = incidence_poincare(g).split
    plus, minus = incidence.plus, incidence.minus
    if side is Side.DOLBEAULT:
        plus = substitute(plus, {"q": U * V})
        minus = substitute(minus, {"q": U * V})

    compositional = plus * (sigma.plus - n) + minus * sigma.minus
    closed = _e_d2_circ_closed_form(side, g, n)
    if compositional != closed:
        raise IdentityMismatchError(f"E(D2°) routes disagree for {side.value}, g={g}", compositional, closed)
    logger.debug(f"E(D2°) {side.value} g={g} agrees with its closed form")
    return compositional
