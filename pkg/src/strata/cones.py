"""Intersection cohomology of affine cones and of the normal slices to Sigma."""
from loguru import logger

from src.algebra.laurent import Q, LaurentPoly
from src.algebra.operations import exact_div, substitute
from src.exceptions.custom import NegativePrimitiveError
from src.strata.incidence import incidence_poincare
from src.strata.models import BettiVector


def cone_ih_truncation(betti: BettiVector, n: int) -> LaurentPoly:
    """IH of the affine cone of complex dimension n over a projective X with the given Betti numbers.

    Only primitive classes in degrees below n survive:
    IH^d(cone) = H^d(X) / L H^{d-2}(X) for d < n, and zero from n on.
    """
    terms: dict[int, int] = {}
    for d in range(n):
        primitive = betti.dim(d) - betti.dim(d - 2)
        if primitive < 0:
            raise NegativePrimitiveError(
                f"dim H^{d} = {betti.dim(d)} < dim H^{d - 2} = {betti.dim(d - 2)}; hard Lefschetz fails below degree {n}"
            )
        if primitive:
            terms[d] = primitive
    return LaurentPoly.from_coefficients([terms.get(d, 0) for d in range(max(terms, default=-1) + 1)], "t")


def ih_normal_slice_sigma(g: int) -> LaurentPoly:
    """One class in each even degree 2k < 4g - 6, written in q = t^2."""
    return exact_div(1 - Q ** (2 * g - 3), 1 - Q)


def ih_normal_slice_sigma_via_cone(g: int) -> LaurentPoly:
    """The slice normal to Sigma is the cone over I_{2g-3}."""
    truncated = cone_ih_truncation(incidence_poincare(g).betti_vector(), 4 * g - 6)
    return substitute(truncated, {("t", 2): Q})


def ih_normal_slice_sigma_prime(g: int) -> LaurentPoly:
    """Slice normal to Sigma_R meeting Omega_R: one class in each degree 4k < 4g - 6, in q = t^2."""
    return LaurentPoly.from_coefficients([1 if k % 2 == 0 else 0 for k in range(2 * g - 3)], "q")


def ih_normal_slice_sigma_prime_via_cone(g: int) -> LaurentPoly:
    """Cone over the quotient of I_{2g-3} by the involution, whose cohomology is the invariant part."""
    invariant = BettiVector.from_poincare(incidence_poincare(g).split.plus)
    truncated = cone_ih_truncation(invariant, 4 * g - 6)
    logger.debug(f"Cone truncation over I'_{2 * g - 3}: {truncated}")
    return substitute(truncated, {("t", 2): Q})
