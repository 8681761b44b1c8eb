"""Exceptional strata of the desingularization, per point of Omega."""
from loguru import logger

from src.algebra.laurent import Q, LaurentPoly
from src.algebra.operations import exact_div
from src.exceptions.custom import IdentityMismatchError
from src.strata.models import ExceptionalStrata
from src.utils.helpers import signed_range_sum


def _common(g: int) -> LaurentPoly:
    return (1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g))


def fiber_sum_closed_form(g: int) -> LaurentPoly:
    """Closed form of d1 + d3 - d13."""
    numerator = _common(g) * (1 - Q**4 - Q ** (2 * g - 3) - Q ** (2 * g - 1) + 2 * Q ** (2 * g))
    return exact_div(numerator, (1 - Q) ** 3 * (1 - Q**2))


def e_exceptional(g: int) -> ExceptionalStrata:
    common = _common(g)
    cubic = (1 - Q) ** 3 * (1 - Q**2)
    delta_s = exact_div((1 - Q**3) * common, (1 - Q) ** 2 * (1 - Q**2))
    d1 = exact_div((1 - Q**4) * (1 - Q ** (2 * g - 4)) * common, cubic)
    d3 = exact_div((1 - Q**3) * (1 - Q ** (2 * g - 3)) * common, cubic)
    d13 = exact_div((1 - Q**3) * (1 - Q ** (2 * g - 4)) * common, cubic)
    omega_s = exact_div((1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g - 1)) * (1 - Q ** (2 * g)), (1 - Q) ** 2 * (1 - Q**2))

    # Omega_S is D1 with the Delta_S fibres above removed.
    via_d1 = d1 - delta_s * signed_range_sum(0, 2 * g - 6, lambda i: Q ** (i + 1), LaurentPoly())
    if via_d1 != omega_s:
        raise IdentityMismatchError(f"E(Omega_S) identity fails for g={g}", left=via_d1, right=omega_s)

    strata = ExceptionalStrata(
        genus=g,
        delta_s=delta_s,
        d1=d1,
        d3=d3,
        d13=d13,
        omega_s=omega_s,
        degenerate=frozenset(name for name, p in (("d1", d1), ("d3", d3), ("d13", d13)) if p.is_zero),
    )
    if strata.fiber_sum != fiber_sum_closed_form(g):
        raise IdentityMismatchError(f"d1 + d3 - d13 closed form fails for g={g}", strata.fiber_sum, fiber_sum_closed_form(g))
    if strata.degenerate:
        logger.debug(f"Degenerate exceptional strata for g={g}: {sorted(strata.degenerate)}")
    return strata


def ie_omega_r(g: int) -> LaurentPoly:
    """Intersection E-polynomial of Omega_R per point."""
    return exact_div((1 - Q ** (4 * g - 4)) * (1 - Q ** (2 * g)), (1 - Q) * (1 - Q**2))


def ie_omega_r_via_omega_s(g: int, ceil_sum: LaurentPoly) -> LaurentPoly:
    """E(Omega_S) minus the projective-space bundle over the Sigma-part, weighted by the a(i)."""
    projective = exact_div(1 - Q ** (2 * g), 1 - Q)
    return e_exceptional(g).omega_s - projective * ceil_sum


def ie_normal_slice_omega(g: int) -> LaurentPoly:
    """Intersection E-polynomial of a slice normal to Omega."""
    return exact_div(1 - Q ** (2 * g), 1 - Q**2)


def ie_normal_slice_omega_via_truncation(g: int) -> LaurentPoly:
    """The same slice read off the fibre of Omega_R, truncated below the middle degree."""
    return (ie_omega_r(g) * (1 - Q)).truncate(3 * g - 4)
