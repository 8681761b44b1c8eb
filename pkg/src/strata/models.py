"""Strata data models."""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from src.algebra.laurent import LaurentPoly
from src.exceptions.custom import StrataError


class SplitPoly(BaseModel):
    """Invariant and variant parts under an involution."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    plus: LaurentPoly = Field(..., description="Invariant part")
    minus: LaurentPoly = Field(..., description="Variant part")

    @property
    def total(self) -> LaurentPoly:
        return self.plus + self.minus

    @property
    def difference(self) -> LaurentPoly:
        return self.plus - self.minus


class BettiVector(BaseModel):
    """dims[d] = dim H^d."""

    model_config = ConfigDict(frozen=True)

    dims: tuple[NonNegativeInt, ...]

    @classmethod
    def from_poincare(cls, p: LaurentPoly, var: Optional[str] = None) -> "BettiVector":
        """From a Poincare polynomial written in q = t^2 (even degrees only)."""
        if p.is_zero:
            return cls(dims=())
        coeffs = p.coefficients(var)
        dims: list[int] = []
        for k, c in enumerate(coeffs):
            if not isinstance(c, int) or c < 0:
                raise StrataError(f"Betti number of degree {2 * k} is {c}, expected a non-negative integer")
            dims.append(c)
            if k < len(coeffs) - 1:
                dims.append(0)
        return cls(dims=tuple(dims))

    def dim(self, degree: int) -> int:
        return self.dims[degree] if 0 <= degree < len(self.dims) else 0


class StratumPolynomial(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    poly: LaurentPoly
    degenerate: bool = Field(default=False, description="A vanishing factor collapsed the formula to zero")


class IncidencePoincare(BaseModel):
    """Poincare polynomial of the incidence variety in q = t^2, with its involution split."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    full: LaurentPoly
    split: SplitPoly

    def betti_vector(self) -> BettiVector:
        return BettiVector.from_poincare(self.full)


class ExceptionalStrata(BaseModel):
    """E-polynomials of the exceptional strata per point of Omega."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    genus: int
    delta_s: LaurentPoly
    d1: LaurentPoly
    d3: LaurentPoly
    d13: LaurentPoly
    omega_s: LaurentPoly
    degenerate: frozenset[str] = Field(default_factory=frozenset)

    @property
    def fiber_sum(self) -> LaurentPoly:
        """d1 + d3 - d13."""
        return self.d1 + self.d3 - self.d13
