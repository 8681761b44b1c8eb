"""Exact multivariate Laurent polynomials in the variables u, v, t, q.

Exponent vectors always have four slots in the fixed order ``(u, v, t, q)``;
terms are kept sorted lexicographically on those vectors. Coefficients are
exact rationals: ``int`` when integral, ``fractions.Fraction`` otherwise.
``q`` is the alias for ``uv``; a polynomial never carries both.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from src.config.constants import VARIABLE_INDEX, VARIABLES
from src.exceptions.custom import AlgebraError, MixedAliasError

Coefficient = Union[int, Fraction]
Exponent = tuple[int, int, int, int]
Scalar = Union[int, Fraction]

ZERO_EXPONENT: Exponent = (0, 0, 0, 0)

_CONTEXT_NONE = 0
_CONTEXT_Q = 1
_CONTEXT_UV = 2


def normalize_coefficient(value: object) -> Coefficient:
    """Return an exact rational as ``int`` if integral, else as a reduced ``Fraction``."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not polynomial coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return normalize_coefficient(Fraction(value.numerator, value.denominator))
    raise TypeError(f"Coefficient must be an exact rational, got {type(value).__name__}")


def divide_coefficients(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return normalize_coefficient(Fraction(a) / b)


def exponent_of(**powers: int) -> Exponent:
    exp = [0, 0, 0, 0]
    for name, power in powers.items():
        if name not in VARIABLE_INDEX:
            raise AlgebraError(f"Unknown variable {name!r}; expected one of {VARIABLES}")
        exp[VARIABLE_INDEX[name]] = power
    return (exp[0], exp[1], exp[2], exp[3])


def _context_of(terms: Mapping[Exponent, Coefficient]) -> int:
    uses_q = False
    uses_uv = False
    for e in terms:
        if e[3]:
            uses_q = True
        if e[0] or e[1]:
            uses_uv = True
    if uses_q and uses_uv:
        raise MixedAliasError("q is an alias for uv and cannot appear together with u or v")
    if uses_q:
        return _CONTEXT_Q
    if uses_uv:
        return _CONTEXT_UV
    return _CONTEXT_NONE


class LaurentPoly:
    """Immutable exact Laurent polynomial."""

    __slots__ = ("_terms", "_context", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, object]] = None):
        clean: dict[Exponent, Coefficient] = {}
        if terms:
            for exp, coeff in terms.items():
                if len(exp) != 4:
                    raise AlgebraError(f"Exponent vectors have four entries (u, v, t, q), got {exp!r}")
                c = normalize_coefficient(coeff)
                if c:
                    key = (int(exp[0]), int(exp[1]), int(exp[2]), int(exp[3]))
                    clean[key] = c
        self._context = _context_of(clean)
        self._terms = dict(sorted(clean.items()))
        self._hash: Optional[int] = None

    @classmethod
    def _build(cls, raw: dict[Exponent, Coefficient]) -> LaurentPoly:
        # Trusted path for arithmetic results: keys are well formed already.
        clean = {}
        for e, c in raw.items():
            if c:
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                clean[e] = c
        poly = object.__new__(cls)
        poly._context = _context_of(clean)
        poly._terms = dict(sorted(clean.items()))
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def var(cls, name: str, power: int = 1) -> LaurentPoly:
        return cls({exponent_of(**{name: power}): 1})

    @classmethod
    def const(cls, value: Scalar) -> LaurentPoly:
        return cls({ZERO_EXPONENT: value})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **powers: int) -> LaurentPoly:
        return cls({exponent_of(**powers): coeff})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], var: str, start: int = 0) -> LaurentPoly:
        """Univariate polynomial sum(coeffs[i] * var^(start + i))."""
        return cls({exponent_of(**{var: start + i}): c for i, c in enumerate(coeffs)})

    # Queries

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        used = [False, False, False, False]
        for e in self._terms:
            for i in range(4):
                if e[i]:
                    used[i] = True
        return tuple(name for name, flag in zip(VARIABLES, used) if flag)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ZERO_EXPONENT in self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    @property
    def constant_term(self) -> Coefficient:
        return self._terms.get(ZERO_EXPONENT, 0)

    @property
    def uses_uv(self) -> bool:
        return self._context == _CONTEXT_UV

    @property
    def uses_q(self) -> bool:
        return self._context == _CONTEXT_Q

    def items(self) -> Iterator[tuple[Exponent, Coefficient]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def sole_variable(self, default: str = "q") -> str:
        names = self.variables
        if len(names) > 1:
            raise AlgebraError(f"Expected a univariate polynomial, got variables {names}")
        return names[0] if names else default

    def degree(self, var: Optional[str] = None) -> int:
        """Top degree in ``var``, or top total degree when ``var`` is omitted."""
        if not self._terms:
            raise AlgebraError("The zero polynomial has no degree")
        if var is None:
            return max(sum(e) for e in self._terms)
        i = VARIABLE_INDEX[var]
        return max(e[i] for e in self._terms)

    def min_degree(self, var: Optional[str] = None) -> int:
        if not self._terms:
            raise AlgebraError("The zero polynomial has no degree")
        if var is None:
            return min(sum(e) for e in self._terms)
        i = VARIABLE_INDEX[var]
        return min(e[i] for e in self._terms)

    def coefficient(self, degree: int, var: Optional[str] = None) -> Coefficient:
        """Coefficient of ``var^degree`` in a univariate polynomial."""
        name = var or self.sole_variable()
        if any(v != name for v in self.variables):
            raise AlgebraError(f"Polynomial is not univariate in {name}: {self.variables}")
        return self._terms.get(exponent_of(**{name: degree}), 0)

    def coefficients(self, var: Optional[str] = None) -> list[Coefficient]:
        """Dense coefficient list from degree 0 up to the top degree."""
        if not self._terms:
            return []
        name = var or self.sole_variable()
        if any(v != name for v in self.variables):
            raise AlgebraError(f"Polynomial is not univariate in {name}: {self.variables}")
        if self.min_degree(name) < 0:
            raise AlgebraError("Dense coefficients need a polynomial without negative exponents")
        i = VARIABLE_INDEX[name]
        dense: list[Coefficient] = [0] * (self.degree(name) + 1)
        for e, c in self._terms.items():
            dense[e[i]] = c
        return dense

    def evaluate(self, **values: Scalar) -> Coefficient:
        """Evaluate at exact rational values for every variable in use."""
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise AlgebraError(f"No value supplied for {missing}")
        point = [Fraction(values.get(name, 1)) for name in VARIABLES]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for i in range(4):
                if e[i]:
                    term *= point[i] ** e[i]
            total += term
        return normalize_coefficient(total)

    def truncate(self, max_degree: int) -> LaurentPoly:
        """Keep the terms of total degree at most ``max_degree``."""
        return LaurentPoly._build({e: c for e, c in self._terms.items() if sum(e) <= max_degree})

    def shift(self, exponent: Exponent) -> LaurentPoly:
        """Multiply by the monomial with the given exponent vector."""
        a, b, c, d = exponent
        return LaurentPoly._build({(e[0] + a, e[1] + b, e[2] + c, e[3] + d): k for e, k in self._terms.items()})

    def map_coefficients(self, func: Callable[[Coefficient], object]) -> LaurentPoly:
        return LaurentPoly({e: func(c) for e, c in self._terms.items()})

    # Arithmetic

    @staticmethod
    def _coerce(other: object) -> Optional[LaurentPoly]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.const(other)
        return None

    def _check_compatible(self, other: LaurentPoly) -> None:
        if {self._context, other._context} == {_CONTEXT_Q, _CONTEXT_UV}:
            raise MixedAliasError("Cannot combine a polynomial in q with one in u, v; substitute q -> uv first")

    def __add__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        self._check_compatible(rhs)
        out = dict(self._terms)
        for e, c in rhs._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly._build(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._build({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> LaurentPoly:
        return self

    def __sub__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> LaurentPoly:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return LaurentPoly()
            return LaurentPoly._build({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponent, Coefficient] = {}
        get = out.get
        right = list(other._terms.items())
        for a, ca in self._terms.items():
            a0, a1, a2, a3 = a
            for b, cb in right:
                key = (a0 + b[0], a1 + b[1], a2 + b[2], a3 + b[3])
                out[key] = get(key, 0) + ca * cb
        return LaurentPoly._build(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial:
                raise AlgebraError("Only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            return LaurentPoly({tuple(x * n for x in e): Fraction(c) ** n})  # type: ignore[dict-item]
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # Comparison

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants compare equal to their scalar, so they must hash like it
            if self.is_constant:
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Rendering

    def to_text(self) -> str:
        """Render as ``1 + 17*q^2 - 4*u*v^2``; terms in canonical ascending order."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e, c in self._terms.items():
            mono = "*".join(
                name if power == 1 else f"{name}^{power}" for name, power in zip(VARIABLES, e) if power
            )
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for e, c in self._terms.items():
            mono = " ".join(name if power == 1 else f"{name}^{{{power}}}" for name, power in zip(VARIABLES, e) if power)
            magnitude = Fraction(abs(c))
            if magnitude.denominator == 1:
                number = str(magnitude.numerator)
            else:
                number = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            if not mono:
                body = number
            elif magnitude == 1:
                body = mono
            else:
                body = f"{number} {mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


U = LaurentPoly.var("u")
V = LaurentPoly.var("v")
T = LaurentPoly.var("t")
Q = LaurentPoly.var("q")
ONE = LaurentPoly.const(1)
