"""Purity relation between IP_t and the diagonal of the Dolbeault intersection E-polynomial.

IP_t(M) = t^{2 dim M} IE(M_Dol; -t^{-1}, -t^{-1}). The map
p(t) -> t^{2d} p(-1/t) is an involution, so the same substitution goes both ways.
"""
from src.algebra.laurent import Q, T, LaurentPoly
from src.algebra.operations import substitute
from src.exceptions.custom import UnsupportedKindError
from src.invariants.models import InvariantKind, InvariantResult


def _reflect(p: LaurentPoly, dimension: int) -> LaurentPoly:
    return T ** (2 * dimension) * substitute(p, {"t": -(T**-1)})


def diagonal_from_ip(ip: LaurentPoly, dimension: int) -> LaurentPoly:
    """Diagonal IE(s, s) of the Dolbeault space, with s written as t."""
    return _reflect(ip, dimension)


def ip_from_diagonal(diagonal: LaurentPoly, dimension: int) -> LaurentPoly:
    return _reflect(diagonal, dimension)


def purity_transform(ip: InvariantResult) -> LaurentPoly:
    """Diagonal IE of the Dolbeault space in q = s^2.

    Raises OddTSubstitutionError when the diagonal has odd powers of s (the
    case for g >= 3); compare with ``diagonal_from_ip`` instead.
    """
    if ip.kind is not InvariantKind.IP:
        raise UnsupportedKindError(f"Purity transform needs an IP result, got {ip.kind.value}")
    diagonal = diagonal_from_ip(ip.poly, ip.spec.dimension)
    return substitute(diagonal, {("t", 2): Q})
