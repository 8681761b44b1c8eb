"""Tests for result serialization."""
import csv
import io
import json
from fractions import Fraction

import pytest

from src.algebra.laurent import Q
from src.exceptions.custom import ConfigurationError
from src.invariants.dolbeault import ie_dol
from src.invariants.models import Group, InvariantKind, InvariantResult, ModuliSpec, Side
from src.invariants.poincare import ip
from src.output.formatter import format_result, format_table, result_from_json, result_to_csv, result_to_dict


@pytest.fixture
def fractional() -> InvariantResult:
    return InvariantResult(
        spec=ModuliSpec(group=Group.SL2, side=Side.BETTI, genus=2),
        kind=InvariantKind.IE,
        poly=Fraction(1, 2) * Q**3 - 2 * Q,
        torsion_parameter_used=16,
    )


def test_json_round_trip_keeps_tags():
    result = ie_dol(Group.PGL2, 2)
    restored = result_from_json(format_result(result, "json"))
    assert restored == result


def test_json_round_trip_fractions(fractional):
    assert result_from_json(format_result(fractional, "json")).poly == fractional.poly


def test_side_independent_json():
    data = result_to_dict(ip(Group.SL2, 2))
    assert data["side"] is None
    assert data["invariant"] == "ip"
    assert data["variables"] == ["u", "v", "t", "q"]
    assert {"exp": [0, 0, 6, 0], "num": "17", "den": "1"} in data["terms"]


def test_csv(fractional):
    rows = list(csv.reader(io.StringIO(result_to_csv(fractional))))
    assert rows[0] == ["u", "v", "t", "q", "num", "den"]
    assert ["0", "0", "0", "3", "1", "2"] in rows
    assert ["0", "0", "0", "1", "-2", "1"] in rows


@pytest.mark.parametrize(
    "text",
    ["not json", json.dumps({"variables": ["q", "t", "u", "v"]}), json.dumps({"variables": ["u", "v", "t", "q"]})],
)
def test_malformed_json(text):
    with pytest.raises(ConfigurationError):
        result_from_json(text)


def test_latex_fraction(fractional):
    assert format_result(fractional, "latex") == "-2 q + \\frac{1}{2} q^{3}"


def test_unknown_format(fractional):
    with pytest.raises(ConfigurationError):
        format_result(fractional, "xml")


class TestTables:
    def test_text(self):
        assert format_table("euler", [(2, "36"), (3, "528")], "text") == "g=2: 36\ng=3: 528"

    def test_latex(self):
        lines = format_table("ip-sl2", [(2, "1 + t^{2}")], "latex").splitlines()
        assert lines[0] == "\\begin{tabular}{r|l}"
        assert "2 & $1 + t^{2}$ \\\\" in lines
        assert lines[-1] == "\\end{tabular}"

    def test_csv_is_not_a_table_format(self):
        with pytest.raises(ConfigurationError):
            format_table("euler", [], "csv")
