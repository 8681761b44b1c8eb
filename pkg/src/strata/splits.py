"""Involution splits of E-polynomials of tori, cotangent bundles of Jacobians and symmetric squares."""
from fractions import Fraction

from loguru import logger

from src.algebra.laurent import Q, U, V, LaurentPoly
from src.algebra.operations import substitute
from src.exceptions.custom import StrataError, UnsupportedGroupError
from src.invariants.models import Group, ModuliSpec, Side
from src.strata.models import SplitPoly

HALF = Fraction(1, 2)


def _halves(a: LaurentPoly, b: LaurentPoly) -> SplitPoly:
    plus = (a + b) * HALF
    minus = (a - b) * HALF
    if not (plus.is_integral and minus.is_integral):
        raise StrataError(f"Split of ({a}, {b}) has non-integral coefficients")
    return SplitPoly(plus=plus, minus=minus)


def e_torus_split(g: int) -> SplitPoly:
    """E((C*)^{2g}) under inversion, in q."""
    if g < 1:
        raise StrataError(f"Genus must be at least 1, got {g}")
    return _halves((1 - Q) ** (2 * g), (1 + Q) ** (2 * g))


def e_tstar_jac_split(g: int) -> SplitPoly:
    """E(T*Jac) under the involution, in u and v."""
    if g < 1:
        raise StrataError(f"Genus must be at least 1, got {g}")
    w = (U * V) ** g
    return _halves(w * ((1 - U) * (1 - V)) ** g, w * ((1 + U) * (1 + V)) ** g)


def sym2_split(e: LaurentPoly) -> SplitPoly:
    """Swap-involution split of E(X x X) from e = E(X)."""
    squares = {name: LaurentPoly.var(name, 2) for name in e.variables}
    return _halves(e * e, substitute(e, squares))


def e_sigma_omega(spec: ModuliSpec) -> tuple[SplitPoly, LaurentPoly]:
    """Split E-polynomial of the double cover of Sigma and E(Omega)."""
    g = spec.genus
    side = spec.side or Side.BETTI
    if spec.group is Group.SL2:
        sigma = e_torus_split(g) if side is Side.BETTI else e_tstar_jac_split(g)
        return sigma, LaurentPoly.const(2 ** (2 * g))
    if spec.group is Group.GL2:
        if side is Side.BETTI:
            e_omega = (Q - 1) ** (2 * g)
        else:
            e_omega = (U * V) ** g * ((1 - U) * (1 - V)) ** g
        logger.debug(f"GL2 singular locus for g={g} via the symmetric square of M(C, GL1)")
        return sym2_split(e_omega), e_omega
    raise UnsupportedGroupError(f"No singular-locus assembly for {spec.group.value}; use the torsion parameter instead")
