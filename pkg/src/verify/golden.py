"""Printed genus tables, loaded from YAML."""
from pathlib import Path
from typing import Any

import yaml
from loguru import logger
from pydantic import BaseModel, ConfigDict, ValidationError

from src.algebra.laurent import LaurentPoly
from src.config.constants import TABLE_CHOICES
from src.exceptions.custom import ConfigurationError


class GoldenTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    variable: str
    truncated_at_middle: bool = False
    rows: dict[int, dict[int, int]]

    def row(self, g: int) -> LaurentPoly:
        coeffs = self.rows[g]
        return sum((LaurentPoly.monomial(c, **{self.variable: d}) for d, c in coeffs.items()), LaurentPoly())

    @property
    def genera(self) -> list[int]:
        return sorted(self.rows)


class GoldenTables(BaseModel):
    model_config = ConfigDict(frozen=True)

    ie_sl2: GoldenTable
    ip_sl2: GoldenTable
    ip_minus_p: GoldenTable
    euler: dict[str, dict[int, int]]

    def table(self, which: str) -> GoldenTable:
        """Polynomial tables by their CLI name."""
        if which not in TABLE_CHOICES or which == "euler":
            raise KeyError(which)
        return getattr(self, which.replace("-", "_"))


def load_golden_tables(path: Path) -> GoldenTables:
    try:
        with open(path, encoding="utf-8") as fh:
            raw: Any = yaml.safe_load(fh)
        tables = GoldenTables.model_validate(raw)
    except (OSError, yaml.YAMLError, ValidationError) as e:
        raise ConfigurationError(f"Cannot load golden tables from {path}: {e}") from e
    logger.debug(f"Loaded golden tables from {path}")
    return tables


def complete_palindromic(truncated: LaurentPoly, center: int) -> LaurentPoly:
    """Extend a polynomial printed up to its middle degree by mirroring about ``center``."""
    var = truncated.sole_variable()
    full = truncated
    for d in range(center):
        c = truncated.coefficient(d, var)
        if c:
            full = full + LaurentPoly.monomial(c, **{var: 2 * center - d})
    return full
