"""E-polynomials of the desingularization T(C, SL2) on both sides."""
from fractions import Fraction
from typing import Optional

from loguru import logger

from src.algebra.laurent import Q, U, V, LaurentPoly
from src.algebra.operations import exact_div, substitute
from src.dt.assembly import e_d2_circ, invert_ie
from src.exceptions.custom import IdentityMismatchError, UnsupportedGroupError
from src.invariants.betti import ie_betti_formula
from src.invariants.checks import require_integral, require_palindromic, resolve_torsion, torsion_note
from src.invariants.dolbeault import e_dol_sm_sl2
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec, Side
from src.strata.exceptional import e_exceptional, fiber_sum_closed_form
from src.strata.splits import e_torus_split
from src.utils.decorators import measure_time

HALF = Fraction(1, 2)


def _betti_regular_numerator(g: int) -> LaurentPoly:
    """Numerator of the Omega contribution, over (1-q)^3 (1-q^2).

    Exponents coincide for small g, so the terms are summed rather than keyed.
    """
    terms = [
        (0, 2), (1, -1), (3, -1),
        (2 * g - 4, -1), (2 * g - 2, -2), (2 * g - 1, 1), (2 * g, -2), (2 * g + 1, 4), (2 * g + 2, -1), (2 * g + 3, 1),
        (4 * g - 6, 1), (4 * g - 5, -1), (4 * g - 4, 4), (4 * g - 3, -2), (4 * g - 2, 1), (4 * g - 1, -2), (4 * g + 1, -1),
        (6 * g - 6, -1), (6 * g - 4, -1), (6 * g - 3, 2),
    ]  # fmt: skip
    total = LaurentPoly()
    for k, c in terms:
        total = total + c * Q**k
    return total


def e_t_betti_closed_form(g: int, torsion: int) -> LaurentPoly:
    m = 2 * g - 3
    sigma_part = HALF * Q * ((1 + Q) ** (2 * g - 1) * (1 + Q**m) + (1 - Q) ** (2 * g - 1) * (1 - Q**m))
    omega_part = exact_div(torsion * Q * _betti_regular_numerator(g), (1 - Q) ** 3 * (1 - Q**2))
    return ie_betti_formula(g, torsion) + sigma_part * exact_div(1 - Q**m, 1 - Q) + omega_part


def e_t_dolbeault_closed_form(g: int, torsion: int, e_sm: Optional[LaurentPoly] = None) -> LaurentPoly:
    w = U * V
    a = ((1 - U) * (1 - V)) ** g
    b = ((1 + U) * (1 + V)) ** g
    smooth = e_dol_sm_sl2(g, torsion) if e_sm is None else e_sm
    bracket = a * exact_div(1 - w ** (2 * g - 3), 1 - w) + b * exact_div(1 + w ** (2 * g - 3), 1 + w)
    d2 = HALF * w**g * exact_div(1 - w ** (2 * g - 2), 1 - w) * bracket
    d2 = d2 - torsion * exact_div((1 - w ** (2 * g - 2)) ** 2, (1 - w**2) * (1 - w))
    fibers = substitute(fiber_sum_closed_form(g), {"q": w})
    return smooth + d2 + torsion * fibers


def _compositional(side: Side, g: int, torsion: int, e_sm: Optional[LaurentPoly]) -> LaurentPoly:
    """E(M^sm) + E(D2°) + N (E(D1) + E(D3) - E(D13))."""
    fibers = e_exceptional(g).fiber_sum
    if side is Side.BETTI:
        sigma = e_torus_split(g)
        e_m = invert_ie(ie_betti_formula(g, torsion), sigma, LaurentPoly.const(torsion), g)
        smooth = e_m - sigma.plus
    else:
        smooth = e_dol_sm_sl2(g, torsion) if e_sm is None else e_sm
        fibers = substitute(fibers, {"q": U * V})
    return smooth + e_d2_circ(side, g, torsion) + torsion * fibers


@measure_time
def e_t(side: Side, g: int, group: Group = Group.SL2, torsion_N: Optional[int] = None) -> InvariantResult:
    """E-polynomial of the desingularization, by closed form and by strata."""
    if group is Group.GL2:
        raise UnsupportedGroupError("No desingularization E-polynomial for GL2")
    n = resolve_torsion(group, g, torsion_N)
    spec = ModuliSpec(group=group, side=side, genus=g)
    label = f"E_T({group.value}, {side.value}, g={g})"

    e_sm = e_dol_sm_sl2(g, n) if side is Side.DOLBEAULT else None
    closed = e_t_betti_closed_form(g, n) if side is Side.BETTI else e_t_dolbeault_closed_form(g, n, e_sm)
    compositional = _compositional(side, g, n, e_sm)
    if closed != compositional:
        raise IdentityMismatchError(f"{label}: closed form and strata sum disagree", closed, compositional)

    require_integral(closed, label)
    if side is Side.BETTI:
        require_palindromic(closed, spec.dimension // 2, label)
    logger.debug(f"{label} agrees with its strata decomposition")
    return InvariantResult(
        spec=spec,
        kind=InvariantKind.E_T,
        poly=closed,
        torsion_parameter_used=n,
        provenance="E(T) closed form, cross-checked with E(M^sm) + E(D2°) + N E(D1 + D3 - D13)" + torsion_note(g, n),
    )
