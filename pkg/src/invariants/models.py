"""Moduli space selectors and tagged invariant results."""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.algebra.laurent import LaurentPoly
from src.config.constants import MIN_GENUS


class Group(str, Enum):
    SL2 = "sl2"
    PGL2 = "pgl2"
    GL2 = "gl2"


class Side(str, Enum):
    BETTI = "betti"
    DOLBEAULT = "dolbeault"


class InvariantKind(str, Enum):
    """Invariant kinds, valued by their CLI spelling."""

    IE = "ie"
    IP = "ip"
    P = "p"
    E_T = "e-t"
    IE_VAR = "ie-var"
    IP_VAR = "ip-var"
    EULER = "euler"


SIDE_DEPENDENT_KINDS = frozenset({InvariantKind.IE, InvariantKind.E_T, InvariantKind.IE_VAR})


class ModuliSpec(BaseModel):
    """Selects M(C, G) on the Betti or Dolbeault side.

    ``side`` is ``None`` for invariants that do not depend on it (the two
    spaces are homeomorphic, so IP, P and Euler characteristics agree).
    """

    model_config = ConfigDict(frozen=True)

    group: Group = Field(..., description="Structure group")
    side: Optional[Side] = Field(default=None, description="Betti or Dolbeault side")
    genus: int = Field(..., ge=MIN_GENUS, description="Genus of the curve")

    @property
    def dimension(self) -> int:
        """Complex dimension of the moduli space."""
        if self.group is Group.GL2:
            return 8 * self.genus - 6
        return 6 * self.genus - 6

    @property
    def torsion_parameter(self) -> int:
        """Number of points of Omega seen by the formulas: 2^{2g} for SL2, 1 otherwise."""
        return 2 ** (2 * self.genus) if self.group is Group.SL2 else 1


class InvariantResult(BaseModel):
    """A polynomial invariant together with what it is and where it came from."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: ModuliSpec
    kind: InvariantKind
    poly: LaurentPoly
    torsion_parameter_used: int = Field(..., ge=1)
    provenance: str = Field(default="", description="Formula family used to produce the value")
