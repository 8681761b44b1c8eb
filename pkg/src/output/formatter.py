"""Serialization of invariant results and genus tables."""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Sequence

from src.algebra.laurent import LaurentPoly
from src.config.constants import VARIABLES
from src.exceptions.custom import ConfigurationError
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec, Side


def result_to_dict(result: InvariantResult) -> dict[str, Any]:
    spec = result.spec
    terms = []
    for e, c in result.poly.items():
        value = Fraction(c)
        terms.append({"exp": list(e), "num": str(value.numerator), "den": str(value.denominator)})
    return {
        "invariant": result.kind.value,
        "group": spec.group.value,
        "side": spec.side.value if spec.side else None,
        "genus": spec.genus,
        "torsion_parameter": result.torsion_parameter_used,
        "provenance": result.provenance,
        "variables": list(VARIABLES),
        "terms": terms,
    }


def result_to_json(result: InvariantResult) -> str:
    return json.dumps(result_to_dict(result), indent=2)


def result_from_json(text: str) -> InvariantResult:
    """Inverse of ``result_to_json``."""
    try:
        data = json.loads(text)
        if data["variables"] != list(VARIABLES):
            raise ValueError(f"unexpected variable order {data['variables']}")
        poly = LaurentPoly({tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]})
        spec = ModuliSpec(
            group=Group(data["group"]),
            side=Side(data["side"]) if data["side"] else None,
            genus=data["genus"],
        )
        return InvariantResult(
            spec=spec,
            kind=InvariantKind(data["invariant"]),
            poly=poly,
            torsion_parameter_used=data["torsion_parameter"],
            provenance=data.get("provenance", ""),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"Malformed invariant JSON: {e}") from e


def result_to_csv(result: InvariantResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([*VARIABLES, "num", "den"])
    for e, c in result.poly.items():
        value = Fraction(c)
        writer.writerow([*e, value.numerator, value.denominator])
    return buffer.getvalue().rstrip("\n")


def format_result(result: InvariantResult, fmt: str) -> str:
    if fmt == "text":
        return result.poly.to_text()
    if fmt == "json":
        return result_to_json(result)
    if fmt == "csv":
        return result_to_csv(result)
    if fmt == "latex":
        return result.poly.to_latex()
    raise ConfigurationError(f"Unknown output format {fmt!r}")


def format_table(title: str, rows: Sequence[tuple[int, str]], fmt: str) -> str:
    """Rows are (genus, already rendered entry); LaTeX rows expect LaTeX entries."""
    if fmt == "latex":
        lines = ["\\begin{tabular}{r|l}", f"$g$ & {title} \\\\", "\\hline"]
        lines += [f"{g} & ${entry}$ \\\\" for g, entry in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    if fmt != "text":
        raise ConfigurationError(f"Tables render as text or latex, not {fmt!r}")
    return "\n".join(f"g={g}: {entry}" for g, entry in rows)
