"""Univariate power series known up to a stated order."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from src.algebra.laurent import Coefficient, LaurentPoly, normalize_coefficient
from src.config.constants import VARIABLES
from src.exceptions.custom import AlgebraError, NonUnitConstantTermError

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """Coefficients of degrees ``0..order``; everything above is unknown."""

    __slots__ = ("_variable", "_coefficients", "_order")

    def __init__(self, variable: str, coefficients: Iterable[Scalar], order: int):
        if variable not in VARIABLES:
            raise AlgebraError(f"Unknown series variable {variable!r}")
        if order < 0:
            raise AlgebraError(f"Series order must be non-negative, got {order}")
        coeffs = [normalize_coefficient(c) for c in coefficients][: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self._variable = variable
        self._coefficients: tuple[Coefficient, ...] = tuple(coeffs)
        self._order = order

    @property
    def variable(self) -> str:
        return self._variable

    @property
    def coefficients(self) -> tuple[Coefficient, ...]:
        return self._coefficients

    @property
    def order(self) -> int:
        return self._order

    @classmethod
    def from_poly(cls, p: LaurentPoly, order: int, variable: Optional[str] = None) -> TruncatedSeries:
        name = variable or p.sole_variable(default="t")
        if not p.is_zero and p.min_degree(name) < 0:
            raise AlgebraError("Only polynomials without negative exponents convert to power series")
        return cls(name, p.truncate(order).coefficients(name) if not p.is_zero else [], order)

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_coefficients(self.coefficients, self.variable)

    def coefficient(self, degree: int) -> Coefficient:
        if degree > self.order:
            raise AlgebraError(f"Coefficient of degree {degree} is beyond the known order {self.order}")
        return self.coefficients[degree] if degree >= 0 else 0

    def _align(self, other: TruncatedSeries) -> int:
        if self.variable != other.variable:
            raise AlgebraError(f"Series in {self.variable} and {other.variable} cannot be combined")
        return min(self.order, other.order)

    def __add__(self, other: object) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._align(other)
        return TruncatedSeries(self.variable, [self.coefficients[k] + other.coefficients[k] for k in range(n + 1)], n)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.variable, [-c for c in self.coefficients], self.order)

    def __sub__(self, other: object) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries(self.variable, [c * other for c in self.coefficients], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._align(other)
        a, b = self.coefficients, other.coefficients
        out = [sum((a[i] * b[k - i] for i in range(k + 1)), 0) for k in range(n + 1)]
        return TruncatedSeries(self.variable, out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncatedSeries:
        a = self.coefficients
        if not a[0]:
            raise NonUnitConstantTermError("Reciprocal of a series with zero constant term")
        inv0 = Fraction(1) / a[0]
        b: list[Fraction] = [inv0]
        for k in range(1, self.order + 1):
            s = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
            b.append(-s * inv0)
        return TruncatedSeries(self.variable, b, self.order)

    def __truediv__(self, other: object) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variable, self.coefficients, self.order) == (other.variable, other.coefficients, other.order)

    def __hash__(self) -> int:
        return hash((self.variable, self.coefficients, self.order))

    def to_text(self) -> str:
        head = self.to_poly().to_text()
        tail = f"O({self.variable}^{self.order + 1})"
        return tail if head == "0" else f"{head} + {tail}"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_text()!r})"
