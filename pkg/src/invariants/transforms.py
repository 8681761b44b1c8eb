"""Passing from PGL2 invariants to GL2 ones."""
from typing import Optional

from loguru import logger

from src.algebra.laurent import Q, T, U, V, LaurentPoly
from src.exceptions.custom import UnsupportedGroupError, UnsupportedKindError
from src.invariants.models import Group, InvariantKind, InvariantResult, Side


def gl1_factor(kind: InvariantKind, side: Optional[Side], g: int) -> LaurentPoly:
    """The invariant of M(C, GL1) by which the PGL2 value is multiplied."""
    if kind is InvariantKind.IE and side is Side.BETTI:
        return (Q - 1) ** (2 * g)
    if kind is InvariantKind.IE and side is Side.DOLBEAULT:
        return (U * V) ** g * ((1 - U) * (1 - V)) ** g
    if kind in (InvariantKind.IP, InvariantKind.P):
        return (T + 1) ** (2 * g)
    raise UnsupportedKindError(f"No GL2 transform for {kind.value}")


def transform_gl2(pgl2_result: InvariantResult) -> InvariantResult:
    spec = pgl2_result.spec
    if spec.group is not Group.PGL2:
        raise UnsupportedGroupError(f"GL2 transform expects a PGL2 result, got {spec.group.value}")
    factor = gl1_factor(pgl2_result.kind, spec.side, spec.genus)
    logger.debug(f"GL2 {pgl2_result.kind.value} for g={spec.genus} from PGL2")
    return InvariantResult(
        spec=spec.model_copy(update={"group": Group.GL2}),
        kind=pgl2_result.kind,
        poly=factor * pgl2_result.poly,
        torsion_parameter_used=pgl2_result.torsion_parameter_used,
        provenance=f"E(M(C, GL1)) * {pgl2_result.provenance}",
    )
