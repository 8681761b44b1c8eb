"""Custom exceptions."""
from typing import Any


class CharVarError(Exception):
    """Base exception for the invariants engine."""
    pass


class ConfigurationError(CharVarError):
    """Configuration error."""
    pass


# Algebra kernel

class AlgebraError(CharVarError):
    """Exact polynomial arithmetic error."""
    pass


class MixedAliasError(AlgebraError):
    """An operation would mix q with u or v in one polynomial."""
    pass


class NonExactDivisionError(AlgebraError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, message: str, remainder: Any = None):
        super().__init__(message)
        self.remainder = remainder


class OddTSubstitutionError(AlgebraError):
    """A square substitution was requested on a polynomial with odd powers."""
    pass


class NonUnitConstantTermError(AlgebraError):
    """Reciprocal of a series whose constant term is zero."""
    pass


# Strata and decomposition theorem

class StrataError(CharVarError):
    """Strata polynomial error."""
    pass


class NegativePrimitiveError(StrataError):
    """Betti numbers violate the Lefschetz hypothesis of cone truncation."""
    pass


class UnsupportedGroupError(StrataError):
    """Group not supported by this construction."""
    pass


class NegativeMultiplicityError(StrataError):
    """A decomposition theorem multiplicity came out negative or non-integral."""
    pass


class IdentityMismatchError(CharVarError):
    """Two independent routes to the same polynomial disagree."""

    def __init__(self, message: str, left: Any = None, right: Any = None):
        super().__init__(message)
        self.left = left
        self.right = right


# Invariants

class InvariantError(CharVarError):
    """Invariant computation error."""
    pass


class NonIntegerCoefficientError(InvariantError):
    """Half-integer intermediates failed to cancel."""
    pass


class NegativeCoefficientError(InvariantError):
    """A Poincare polynomial has a negative Betti number."""
    pass


class PalindromyFailureError(InvariantError):
    """Polynomial expected to be palindromic is not."""
    pass


class ConsistencyFailureError(InvariantError):
    """Closed form and evaluation disagree."""
    pass


class ExpansionMismatchError(InvariantError):
    """Low-order expansion differs from the expected terms."""
    pass


class UnsupportedKindError(InvariantError):
    """Transform not defined for this invariant kind."""
    pass


class UnsupportedCombinationError(InvariantError):
    """No formula for this (invariant, group, side) combination."""
    pass
