"""Exact division, substitution and palindromy on Laurent polynomials."""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Union

from loguru import logger

from src.algebra.laurent import (
    ZERO_EXPONENT,
    Coefficient,
    Exponent,
    LaurentPoly,
    divide_coefficients,
    exponent_of,
)
from src.config.constants import VARIABLE_INDEX
from src.exceptions.custom import AlgebraError, NonExactDivisionError, OddTSubstitutionError

RuleKey = Union[str, tuple[str, int]]
RuleValue = Union[LaurentPoly, int, Fraction]


def _min_exponent(p: LaurentPoly) -> Exponent:
    lows = [0, 0, 0, 0]
    first = True
    for e, _ in p.items():
        if first:
            lows = list(e)
            first = False
        else:
            for i in range(4):
                if e[i] < lows[i]:
                    lows[i] = e[i]
    return (lows[0], lows[1], lows[2], lows[3])


def _negate(e: Exponent) -> Exponent:
    return (-e[0], -e[1], -e[2], -e[3])


def _long_divide(
    num: Mapping[Exponent, Coefficient], den: Mapping[Exponent, Coefficient]
) -> tuple[dict[Exponent, Coefficient], dict[Exponent, Coefficient]]:
    """Multivariate division by a single divisor under lex order on (u, v, t, q)."""
    lead = max(den)
    lead_c = den[lead]
    tail = [(e, c) for e, c in den.items() if e != lead]

    remaining: dict[Exponent, Coefficient] = dict(num)
    heap = [_negate(e) for e in remaining]
    heapq.heapify(heap)
    quotient: dict[Exponent, Coefficient] = {}
    remainder: dict[Exponent, Coefficient] = {}

    while heap:
        e = _negate(heapq.heappop(heap))
        c = remaining.pop(e, 0)
        if not c:
            continue
        if e[0] >= lead[0] and e[1] >= lead[1] and e[2] >= lead[2] and e[3] >= lead[3]:
            qe = (e[0] - lead[0], e[1] - lead[1], e[2] - lead[2], e[3] - lead[3])
            qc = divide_coefficients(c, lead_c)
            quotient[qe] = qc
            # every new key is lex-smaller than e, so nothing already popped comes back
            for de, dc in tail:
                key = (qe[0] + de[0], qe[1] + de[1], qe[2] + de[2], qe[3] + de[3])
                if key in remaining:
                    remaining[key] = remaining[key] - qc * dc
                else:
                    remaining[key] = -qc * dc
                    heapq.heappush(heap, _negate(key))
        else:
            remainder[e] = c
    return quotient, remainder


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``p`` with ``p * den == num``; raise if the division is not exact."""
    if den.is_zero:
        raise AlgebraError("Division by the zero polynomial")
    if num.is_zero:
        return LaurentPoly()
    num._check_compatible(den)

    # Strip monomial content so both sides are honest polynomials.
    num_low = _min_exponent(num)
    den_low = _min_exponent(den)
    n = num.shift(_negate(num_low))
    d = den.shift(_negate(den_low))

    quotient, remainder = _long_divide(n.terms, d.terms)
    if any(remainder.values()):
        rest = LaurentPoly(remainder).shift(num_low)
        logger.debug(f"Inexact division ({num}) / ({den}), remainder {rest}")
        raise NonExactDivisionError(f"({den}) does not divide ({num}); remainder {rest}", remainder=rest)

    offset = tuple(a - b for a, b in zip(num_low, den_low))
    return LaurentPoly(quotient).shift(offset)  # type: ignore[arg-type]


def sum_over_denominator(terms: Iterable[tuple[LaurentPoly, LaurentPoly]], common: LaurentPoly) -> LaurentPoly:
    """Sum the rational terms num/den, all of whose denominators divide ``common``.

    Each term is lifted to ``common`` exactly; the final division by ``common``
    is exact whenever the total is a polynomial.
    """
    total = LaurentPoly()
    for numerator, denominator in terms:
        total = total + numerator * exact_div(common, denominator)
    return exact_div(total, common)


def _parse_rule(key: RuleKey) -> tuple[int, int]:
    if isinstance(key, tuple):
        name, power = key
    else:
        name, power = key, 1
    if name not in VARIABLE_INDEX:
        raise AlgebraError(f"Unknown variable {name!r} in substitution")
    if power < 1:
        raise AlgebraError(f"Substitution power must be positive, got {power}")
    return VARIABLE_INDEX[name], power


def substitute(p: LaurentPoly, rules: Mapping[RuleKey, RuleValue]) -> LaurentPoly:
    """Apply the ring homomorphism defined by ``rules``.

    A key is either a variable name (``"q"`` maps q) or a pair ``("t", 2)``
    mapping t^2; in the latter case every exponent of t must be even.
    Variables without a rule are left alone. Negative exponents need a
    monomial image.
    """
    parsed: dict[int, tuple[int, LaurentPoly]] = {}
    for key, image in rules.items():
        index, power = _parse_rule(key)
        if index in parsed:
            raise AlgebraError(f"Two substitution rules for variable {key!r}")
        parsed[index] = (power, image if isinstance(image, LaurentPoly) else LaurentPoly.const(image))

    powers: dict[tuple[int, int], LaurentPoly] = {}

    def image_power(index: int, exponent: int) -> LaurentPoly:
        power, image = parsed[index]
        if exponent % power:
            raise OddTSubstitutionError(
                f"Cannot substitute for variable power {power}: polynomial has exponent {exponent}"
            )
        k = exponent // power
        cached = powers.get((index, k))
        if cached is None:
            cached = image**k
            powers[(index, k)] = cached
        return cached

    acc: dict[Exponent, Coefficient] = {}
    for e, c in p.items():
        kept = [0, 0, 0, 0]
        factor = LaurentPoly({ZERO_EXPONENT: c})
        for i in range(4):
            if not e[i]:
                continue
            if i in parsed:
                factor = factor * image_power(i, e[i])
            else:
                kept[i] = e[i]
        for fe, fc in factor.items():
            key = (fe[0] + kept[0], fe[1] + kept[1], fe[2] + kept[2], fe[3] + kept[3])
            acc[key] = acc.get(key, 0) + fc
    return LaurentPoly(acc)


def palindrome_check(p: LaurentPoly, center_degree: Union[int, Fraction]) -> bool:
    """True iff coefficient(d) == coefficient(2*center - d) for every d."""
    twice = Fraction(center_degree) * 2
    if twice.denominator != 1:
        raise AlgebraError(f"Palindromy center must be a multiple of 1/2, got {center_degree}")
    var = p.sole_variable()
    index = VARIABLE_INDEX[var]
    mirror = twice.numerator
    terms = p.terms
    for e, c in terms.items():
        if terms.get(exponent_of(**{var: mirror - e[index]}), 0) != c:
            return False
    return True
