"""Multiplicities a(i), b(j) of the local systems in the decomposition theorem."""
from loguru import logger

from src.algebra.laurent import Q, LaurentPoly
from src.algebra.operations import exact_div
from src.dt.models import MultiplicityVector
from src.exceptions.custom import IdentityMismatchError, NegativeMultiplicityError
from src.strata.cones import ih_normal_slice_sigma_prime
from src.strata.exceptional import e_exceptional, fiber_sum_closed_form, ie_normal_slice_omega
from src.strata.incidence import incidence_poincare
from src.utils.helpers import ceil_half


def a_coeffs(g: int) -> MultiplicityVector:
    """a(i) = ceil((2g - 3 - |i|) / 2), for |i| <= 2g - 3."""
    span = 2 * g - 3
    return MultiplicityVector(kind="a", genus=g, values={i: ceil_half(span - abs(i)) for i in range(-span, span + 1)})


def a_coeffs_from_slices(g: int) -> MultiplicityVector:
    """a(i) = dim H^{4g-6+2i}(I') - dim IH^{4g-6+2i}(N'), read in q = t^2."""
    span = 2 * g - 3
    invariant = incidence_poincare(g).split.plus
    slice_ih = ih_normal_slice_sigma_prime(g)
    values = {}
    for i in range(-span, span + 1):
        k = span + i
        value = invariant.coefficient(k, "q") - slice_ih.coefficient(k, "q")
        if value < 0:
            raise NegativeMultiplicityError(f"a({i}) = {value} for g={g}")
        values[i] = value
    return MultiplicityVector(kind="a", genus=g, values=values)


def _literal_sum(g: int, rounding: str) -> LaurentPoly:
    span = 2 * g - 3
    total = LaurentPoly()
    for i in range(-span, span + 1):
        n = span - abs(i)
        c = ceil_half(n) if rounding == "ceil" else n // 2
        if c:
            total = total + c * Q ** (span + i)
    return total


def multiplicity_sums(g: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Generating sums of the ceiling and floor multiplicities, checked against the literal sums."""
    ceil_sum = exact_div(Q * (1 - Q ** (2 * g - 3)) * (1 - Q ** (2 * g - 2)), (1 - Q) * (1 - Q**2))
    floor_sum = exact_div(Q**2 * (1 - Q ** (2 * g - 4)) * (1 - Q ** (2 * g - 3)), (1 - Q) * (1 - Q**2))
    for name, closed, rounding in (("ceil", ceil_sum, "ceil"), ("floor", floor_sum, "floor")):
        literal = _literal_sum(g, rounding)
        if closed != literal:
            raise IdentityMismatchError(f"{name} sum closed form differs from the literal sum for g={g}", closed, literal)
    return ceil_sum, floor_sum


def stalk_polynomial(g: int) -> LaurentPoly:
    """E of the fibre over a point of Omega minus IE(N_Omega) minus the a(i) contribution."""
    ceil_sum, _ = multiplicity_sums(g)
    return fiber_sum_closed_form(g) - ie_normal_slice_omega(g) - ceil_sum


def b_coeffs(g: int) -> MultiplicityVector:
    """b(j) read off the stalk polynomial at q^{3g-3+j}, for |j| <= 3g - 4."""
    stalk = stalk_polynomial(g)
    offset = 3 * g - 3
    span = 3 * g - 4
    values: dict[int, int] = {}
    for e, c in stalk.items():
        j = e[3] - offset
        if abs(j) > span:
            raise IdentityMismatchError(f"Stalk polynomial for g={g} has a term q^{e[3]} outside the b(j) range")
        if not isinstance(c, int) or c < 0:
            raise NegativeMultiplicityError(f"b({j}) = {c} for g={g} is not a non-negative integer")
        values[j] = c
    logger.debug(f"b(j) for g={g}: {[values.get(j, 0) for j in range(-span, span + 1)]}")
    return MultiplicityVector(kind="b", genus=g, values={j: values.get(j, 0) for j in range(-span, span + 1)})


def stalk_identity_holds(g: int) -> bool:
    """sum b(j) q^{3g-3+j} + IE(N_Omega) + ceil_sum equals d1 + d3 - d13 of the strata."""
    ceil_sum, _ = multiplicity_sums(g)
    lhs = b_coeffs(g).to_poly(3 * g - 3) + ie_normal_slice_omega(g) + ceil_sum
    return lhs == e_exceptional(g).fiber_sum
