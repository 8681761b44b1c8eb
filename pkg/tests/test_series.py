"""Tests for truncated power series."""
from fractions import Fraction

import pytest

from src.algebra.laurent import Q, T
from src.algebra.series import TruncatedSeries
from src.exceptions.custom import AlgebraError, NonUnitConstantTermError


def test_geometric_reciprocal():
    s = TruncatedSeries.from_poly(1 - T, 4)
    assert s.reciprocal() == TruncatedSeries("t", [1, 1, 1, 1, 1], 4)


def test_reciprocal_with_rational_constant():
    s = TruncatedSeries("t", [2, 1], 2)
    assert s.reciprocal().coefficients == (Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8))


def test_reciprocal_needs_unit_constant_term():
    with pytest.raises(NonUnitConstantTermError):
        TruncatedSeries.from_poly(2 * T, 3).reciprocal()


def test_order_is_the_minimum():
    a = TruncatedSeries.from_poly(1 + T, 5)
    b = TruncatedSeries.from_poly(1 + T, 2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a * b).to_poly() == 1 + 2 * T + T**2


def test_scalar_multiplication():
    s = TruncatedSeries.from_poly(1 + T, 3)
    assert (3 * s).to_poly() == 3 + 3 * T
    assert (s * Fraction(1, 2)).coefficient(1) == Fraction(1, 2)


def test_division():
    one = TruncatedSeries.from_poly(1 + 0 * T, 4)
    assert one / TruncatedSeries.from_poly(1 - T**2, 4) == TruncatedSeries("t", [1, 0, 1, 0, 1], 4)


def test_coefficient_beyond_order():
    s = TruncatedSeries.from_poly(1 + T**7, 3)
    assert s.to_poly() == 1
    with pytest.raises(AlgebraError):
        s.coefficient(4)


def test_variables_must_match():
    with pytest.raises(AlgebraError):
        TruncatedSeries.from_poly(1 + T, 2) + TruncatedSeries.from_poly(1 + Q, 2)


def test_negative_exponents_are_rejected():
    with pytest.raises(AlgebraError):
        TruncatedSeries.from_poly(T**-1, 2)


def test_order_zero():
    assert TruncatedSeries.from_poly(1 + T, 0).to_poly() == 1


def test_text():
    assert TruncatedSeries.from_poly(1 + T**2, 3).to_text() == "1 + t^2 + O(t^4)"
    assert TruncatedSeries.from_poly(T**5, 3).to_text() == "O(t^4)"


@pytest.mark.parametrize("attribute,value", [("order", 5), ("variable", "q"), ("coefficients", (1,))])
def test_series_are_immutable(attribute, value):
    s = TruncatedSeries("t", [1, 2, 3], 2)
    with pytest.raises(AttributeError):
        setattr(s, attribute, value)
    assert s == TruncatedSeries("t", [1, 2, 3], 2)
