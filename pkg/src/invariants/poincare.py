"""Intersection and ordinary Poincare polynomials in t, and their low-order expansions."""
from fractions import Fraction
from math import comb
from typing import Optional

from loguru import logger

from src.algebra.laurent import ONE, T, LaurentPoly
from src.algebra.operations import sum_over_denominator
from src.algebra.series import TruncatedSeries
from src.config.constants import CORRECTION_EXPANSION_MIN_GENUS, CORRECTION_EXPANSION_ORDER
from src.exceptions.custom import ExpansionMismatchError, InvariantError
from src.invariants.checks import require_nonnegative, resolve_torsion, torsion_note
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec
from src.invariants.transforms import gl1_factor
from src.utils.decorators import measure_time

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _classifying_numerator(g: int) -> LaurentPoly:
    return (T**3 + 1) ** (2 * g)


def _common_denominator() -> LaurentPoly:
    return (T**2 - 1) * (T**4 - 1)


def _regular_variant_part(g: int, n: int) -> LaurentPoly:
    """(N-1)/2 * t^{4g-4} ((t+1)^{2g-2} + (t-1)^{2g-2})."""
    return Fraction(n - 1, 2) * T ** (4 * g - 4) * ((T + 1) ** (2 * g - 2) + (T - 1) ** (2 * g - 2))


@measure_time
def ip_formula(g: int, torsion: int) -> LaurentPoly:
    den = _common_denominator()
    plus, minus = (T + 1) ** (2 * g), (T - 1) ** (2 * g)
    plus2, minus2 = (T + 1) ** (2 * g - 2), (T - 1) ** (2 * g - 2)
    terms = [
        (_classifying_numerator(g), den),
        ((g - 1) * T ** (4 * g - 3) * plus2, T - 1),
        (-QUARTER * T ** (4 * g - 4) * ((T**2 + 1) ** 2 * plus - (T + 1) ** 4 * minus), den),
        (HALF * T ** (4 * g - 4) * (plus2 - minus2) - HALF * T ** (4 * g - 6) * (plus - minus), ONE),
    ]
    return sum_over_denominator(terms, den) + _regular_variant_part(g, torsion)


@measure_time
def p_formula(g: int, torsion: int) -> LaurentPoly:
    """Ordinary Poincare polynomial, with the sign of the (t-1)^{2g}(t^2-1) term corrected."""
    den = _common_denominator()
    plus, minus = (T + 1) ** (2 * g), (T - 1) ** (2 * g)
    top = T ** (4 * g - 4)
    terms = [
        (_classifying_numerator(g), den),
        (plus * (T**2 + 1) - minus * (T**2 - 1), 2 * (T**4 - 1)),
    ]
    for k in range(2, g + 1):
        m = k % 2
        weight = comb(2 * g, k) - comb(2 * g, k - 2)
        numerator = weight * T ** (k + 2 * m) * (T ** (2 * k - 2 * m) - 1) * (T ** (2 * g - 2 * k + 2) - 1)
        terms.append((numerator, (T - 1) * (T**4 - 1)))
    terms += [
        (-HALF * T * (plus + minus) - top, ONE),
        (T ** (2 * g + 2) - 1, T - 1),
        (minus * top, 4 * (T**2 + 1)),
        (-plus * top * (2 * g * (T - 1) + 1 + Fraction(5 - 4 * g, 2) * (T**2 - 1)), 2 * (T**2 - 1) ** 2),
    ]
    variant = Fraction(torsion - 1, 2) * top * ((T + 1) ** (2 * g - 2) + (T - 1) ** (2 * g - 2) - 2)
    return sum_over_denominator(terms, den) + variant


def _poincare(kind: InvariantKind, group: Group, g: int, torsion_N: Optional[int]) -> InvariantResult:
    n = resolve_torsion(group, g, torsion_N)
    formula = ip_formula if kind is InvariantKind.IP else p_formula
    poly = formula(g, n)
    provenance = f"{kind.value.upper()} closed form" + torsion_note(g, n)
    if group is Group.GL2:
        poly = gl1_factor(kind, None, g) * poly
        provenance = f"(t+1)^{{2g}} * {kind.value.upper()}(PGL2)"
    require_nonnegative(poly, f"{kind.value.upper()}({group.value}, g={g})")
    return InvariantResult(
        spec=ModuliSpec(group=group, genus=g), kind=kind, poly=poly, torsion_parameter_used=n, provenance=provenance
    )


def ip_sl2(g: int, torsion_N: Optional[int] = None) -> InvariantResult:
    """Intersection Poincare polynomial of M(C, SL2)."""
    return _poincare(InvariantKind.IP, Group.SL2, g, torsion_N)


def ip(group: Group, g: int) -> InvariantResult:
    return _poincare(InvariantKind.IP, group, g, None)


def p_ordinary_sl2(g: int, torsion_N: Optional[int] = None) -> InvariantResult:
    """Ordinary Poincare polynomial of M(C, SL2)."""
    return _poincare(InvariantKind.P, Group.SL2, g, torsion_N)


def p(group: Group, g: int) -> InvariantResult:
    return _poincare(InvariantKind.P, group, g, None)


def classifying_series(g: int, order: int) -> TruncatedSeries:
    """P_t of the classifying space of the gauge group, (1+t^3)^{2g} / ((1-t^2)(1-t^4))."""
    numerator = TruncatedSeries.from_poly(_classifying_numerator(g), order, "t")
    denominator = TruncatedSeries.from_poly((1 - T**2) * (1 - T**4), order, "t")
    return numerator / denominator


def ip_low_order_check(g: int) -> bool:
    """IP agrees with the classifying series minus 2g t^{4g-5} below degree 4g-4."""
    order = 4 * g - 5
    expected = classifying_series(g, order) - TruncatedSeries.from_poly(2 * g * T**order, order, "t")
    actual = TruncatedSeries.from_poly(ip_sl2(g).poly, order, "t")
    if actual != expected:
        logger.debug(f"Low-order IP check failed for g={g}: {actual.to_text()} vs {expected.to_text()}")
    return actual == expected


def ip_minus_p_closed_form(g: int) -> TruncatedSeries:
    order = CORRECTION_EXPANSION_ORDER
    t6 = comb(2 * g, 3) - comb(2 * g, 2) - 2 * g
    return TruncatedSeries("t", [0, 0, 0, 2 * g, 1, 2 * g, -t6], order)


def ip_minus_p_expansion(g: int) -> TruncatedSeries:
    """IP - P up to t^6, checked against 2g t^3 + t^4 + 2g t^5 - (C(2g,3) - C(2g,2) - 2g) t^6."""
    if g < CORRECTION_EXPANSION_MIN_GENUS:
        raise InvariantError(f"The IP - P expansion holds for g >= {CORRECTION_EXPANSION_MIN_GENUS}, got g={g}")
    difference = ip_sl2(g).poly - p_ordinary_sl2(g).poly
    series = TruncatedSeries.from_poly(difference, CORRECTION_EXPANSION_ORDER, "t")
    expected = ip_minus_p_closed_form(g)
    if series != expected:
        raise ExpansionMismatchError(f"IP - P for g={g}: {series.to_text()}, expected {expected.to_text()}")
    return series
