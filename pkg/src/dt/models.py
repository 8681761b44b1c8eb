"""Decomposition theorem data models."""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from src.algebra.laurent import LaurentPoly


class MultiplicityVector(BaseModel):
    """Multiplicities indexed by the shift i (or j) of the local system."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["a", "b", "ceil_sum", "floor_sum"]
    genus: int = Field(..., ge=2)
    values: dict[int, NonNegativeInt]

    def __getitem__(self, index: int) -> int:
        return self.values.get(index, 0)

    def window(self, low: int, high: int) -> list[int]:
        return [self[i] for i in range(low, high + 1)]

    def to_poly(self, offset: int, var: str = "q") -> LaurentPoly:
        """sum values[i] * var^(offset + i)."""
        terms = {i + offset: c for i, c in self.values.items() if c}
        if not terms:
            return LaurentPoly()
        low = min(terms)
        return LaurentPoly.from_coefficients([terms.get(k, 0) for k in range(low, max(terms) + 1)], var, start=low)

    def is_symmetric(self) -> bool:
        return all(self[i] == self[-i] for i in self.values)
