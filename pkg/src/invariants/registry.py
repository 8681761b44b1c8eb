"""Dispatch from (kind, group, side) to the formula that computes it."""
from typing import Callable, Optional

from loguru import logger

from src.algebra.laurent import LaurentPoly
from src.exceptions.custom import UnsupportedCombinationError
from src.invariants.betti import euler_char, ie_betti
from src.invariants.desingularization import e_t
from src.invariants.dolbeault import ie_dol
from src.invariants.models import SIDE_DEPENDENT_KINDS, Group, InvariantKind, InvariantResult, ModuliSpec, Side
from src.invariants.poincare import ip, p
from src.invariants.variants import ie_b_var, ie_dol_var, ip_var

Handler = Callable[[ModuliSpec], InvariantResult]

ALL_GROUPS = frozenset(Group)
SUPPORTED_GROUPS: dict[InvariantKind, frozenset[Group]] = {
    InvariantKind.IE: ALL_GROUPS,
    InvariantKind.IP: ALL_GROUPS,
    InvariantKind.P: ALL_GROUPS,
    InvariantKind.E_T: frozenset({Group.SL2, Group.PGL2}),
    InvariantKind.IE_VAR: frozenset({Group.SL2}),
    InvariantKind.IP_VAR: frozenset({Group.SL2}),
    InvariantKind.EULER: frozenset({Group.SL2, Group.PGL2}),
}


def _ie(spec: ModuliSpec) -> InvariantResult:
    if spec.side is Side.BETTI:
        return ie_betti(spec.group, spec.genus)
    return ie_dol(spec.group, spec.genus)


def _variant(kind: InvariantKind, poly: LaurentPoly, spec: ModuliSpec) -> InvariantResult:
    return InvariantResult(
        spec=spec, kind=kind, poly=poly, torsion_parameter_used=spec.torsion_parameter, provenance="variant closed form"
    )


def _ie_var(spec: ModuliSpec) -> InvariantResult:
    poly = ie_b_var(spec.genus) if spec.side is Side.BETTI else ie_dol_var(spec.genus)
    return _variant(InvariantKind.IE_VAR, poly, spec)


def _euler(spec: ModuliSpec) -> InvariantResult:
    value = euler_char(spec.group, spec.genus)
    return InvariantResult(
        spec=spec,
        kind=InvariantKind.EULER,
        poly=LaurentPoly.const(value),
        torsion_parameter_used=spec.torsion_parameter,
        provenance="intersection Euler characteristic closed form, checked at q = 1",
    )


HANDLERS: dict[InvariantKind, Handler] = {
    InvariantKind.IE: _ie,
    InvariantKind.IP: lambda spec: ip(spec.group, spec.genus),
    InvariantKind.P: lambda spec: p(spec.group, spec.genus),
    InvariantKind.E_T: lambda spec: e_t(spec.side or Side.BETTI, spec.genus, spec.group),
    InvariantKind.IE_VAR: _ie_var,
    InvariantKind.IP_VAR: lambda spec: _variant(InvariantKind.IP_VAR, ip_var(spec.genus), spec),
    InvariantKind.EULER: _euler,
}


def is_supported(kind: InvariantKind, group: Group) -> bool:
    return group in SUPPORTED_GROUPS[kind]


def compute_invariant(kind: InvariantKind, spec: ModuliSpec, truncate: Optional[int] = None) -> InvariantResult:
    """Compute ``kind`` for ``spec``, optionally keeping total degree <= ``truncate``."""
    if not is_supported(kind, spec.group):
        raise UnsupportedCombinationError(f"{kind.value} is not available for {spec.group.value}")
    if kind in SIDE_DEPENDENT_KINDS:
        if spec.side is None:
            raise UnsupportedCombinationError(f"{kind.value} needs a side (betti or dolbeault)")
    elif spec.side is not None:
        spec = spec.model_copy(update={"side": None})

    logger.debug(f"Computing {kind.value} for {spec.group.value}/{spec.side.value if spec.side else '-'} g={spec.genus}")
    result = HANDLERS[kind](spec)
    if truncate is not None:
        result = result.model_copy(update={"poly": result.poly.truncate(truncate)})
    return result
