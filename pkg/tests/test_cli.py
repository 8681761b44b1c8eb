"""Tests for the command-line interface."""
import json

import pytest

from src.config.constants import EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, EXIT_VERIFICATION_FAILED
from src.main import cli


def invoke(runner, *args):
    return runner.invoke(cli, list(args), obj={})


class TestCompute:
    def test_ie_betti(self, runner):
        result = invoke(runner, "compute", "--invariant", "ie", "--group", "sl2", "--side", "betti", "--genus", "2")
        assert result.exit_code == 0, result.stderr
        assert result.stdout == "1 + 17*q^2 + 17*q^4 + q^6\n"

    def test_ip_needs_no_side(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "2")
        assert result.stdout == "1 + t^2 + 17*t^4 + 17*t^6\n"

    def test_side_is_ignored_for_ip(self, runner):
        with_side = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--side", "dolbeault", "--genus", "3")
        without = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "3")
        assert with_side.stdout == without.stdout

    def test_euler(self, runner):
        result = invoke(runner, "compute", "--invariant", "euler", "--group", "sl2", "--genus", "4")
        assert result.stdout == "8256\n"
        result = invoke(runner, "compute", "--invariant", "euler", "--group", "pgl2", "--genus", "2")
        assert result.stdout == "6\n"

    def test_ip_prefix(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "3", "--truncate", "4")
        assert result.stdout == "1 + t^2 + 6*t^3 + 2*t^4\n"

    def test_truncate(self, runner):
        result = invoke(
            runner, "compute", "--invariant", "ie", "--group", "sl2", "--side", "betti", "--genus", "2", "--truncate", "4"
        )
        assert result.stdout == "1 + 17*q^2 + 17*q^4\n"

    def test_json(self, runner):
        result = invoke(runner, "compute", "--invariant", "p", "--group", "pgl2", "--genus", "2", "--format", "json")
        data = json.loads(result.stdout)
        assert data["invariant"] == "p"
        assert data["group"] == "pgl2"
        assert data["torsion_parameter"] == 1

    def test_csv(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "2", "--format", "csv")
        lines = result.stdout.splitlines()
        assert lines[0] == "u,v,t,q,num,den"
        assert "0,0,6,0,17,1" in lines

    def test_latex(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "2", "--format", "latex")
        assert result.stdout == "1 + t^{2} + 17 t^{4} + 17 t^{6}\n"

    def test_output_is_deterministic(self, runner):
        args = ("compute", "--invariant", "ie", "--group", "gl2", "--side", "dolbeault", "--genus", "3", "--format", "json")
        assert invoke(runner, *args).stdout == invoke(runner, *args).stdout


class TestComputeErrors:
    def test_missing_side(self, runner):
        result = invoke(runner, "compute", "--invariant", "ie", "--group", "sl2", "--genus", "2")
        assert result.exit_code == EXIT_USAGE
        assert "--side" in result.stderr

    def test_genus_too_small(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "1")
        assert result.exit_code == EXIT_USAGE

    def test_genus_above_configured_maximum(self, runner, monkeypatch):
        monkeypatch.setenv("CHARVAR_MAX_GENUS", "3")
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "4")
        assert result.exit_code == EXIT_USAGE
        assert "CHARVAR_MAX_GENUS" in result.stderr

    def test_invalid_configuration(self, runner, monkeypatch):
        monkeypatch.setenv("CHARVAR_WORKERS", "0")
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "sl2", "--genus", "2")
        assert result.exit_code == EXIT_USAGE

    def test_unknown_group(self, runner):
        result = invoke(runner, "compute", "--invariant", "ip", "--group", "so3", "--genus", "2")
        assert result.exit_code == EXIT_USAGE

    @pytest.mark.parametrize(
        "invariant,group",
        [("e-t", "gl2"), ("ie-var", "pgl2"), ("ip-var", "gl2"), ("euler", "gl2")],
    )
    def test_unsupported_combination(self, runner, invariant, group):
        result = invoke(runner, "compute", "--invariant", invariant, "--group", group, "--side", "betti", "--genus", "2")
        assert result.exit_code == EXIT_UNSUPPORTED
        assert result.stdout == ""


class TestVerify:
    def test_tables_pass(self, runner):
        result = invoke(runner, "verify", "--suite", "tables", "--genus-min", "2", "--genus-max", "3")
        assert result.exit_code == EXIT_OK, result.stdout
        lines = result.stdout.splitlines()
        assert lines
        assert all(line.startswith("PASS tables:") for line in lines)
        assert "checks passed" in result.stderr

    def test_empty_range(self, runner):
        result = invoke(runner, "verify", "--genus-min", "4", "--genus-max", "3")
        assert result.exit_code == EXIT_USAGE

    def test_failure_exit_code(self, runner, monkeypatch):
        from src.verify import suites

        monkeypatch.setattr(suites, "ip_low_order_check", lambda g: False)
        result = invoke(runner, "verify", "--suite", "expansion", "--genus-min", "2", "--genus-max", "2")
        assert result.exit_code == EXIT_VERIFICATION_FAILED
        assert "FAIL expansion:ip_low_order g=2" in result.stdout

    def test_crashing_check_is_reported(self, runner, monkeypatch):
        from src.verify import suites

        def crash(g):
            raise ZeroDivisionError("division by zero")

        monkeypatch.setattr(suites, "ip_low_order_check", crash)
        result = invoke(runner, "verify", "--suite", "expansion", "--genus-min", "2", "--genus-max", "3")
        assert result.exit_code == EXIT_VERIFICATION_FAILED
        assert "FAIL expansion:ip_low_order g=2 [ZeroDivisionError: division by zero]" in result.stdout
        assert "FAIL expansion:ip_low_order g=3" in result.stdout


class TestTable:
    def test_printed_euler(self, runner):
        result = invoke(runner, "table", "--which", "euler", "--paper")
        assert result.stdout.splitlines()[0] == "g=2: sl2=36, pgl2=6"

    def test_printed_truncated_rows(self, runner):
        result = invoke(runner, "table", "--which", "ie-sl2", "--paper")
        assert result.stdout.splitlines()[0] == "g=2: 1 + 17*q^2 + ..."

    def test_computed_rows(self, runner):
        result = invoke(runner, "table", "--which", "ip-minus-p", "--genus-range", "2..3")
        lines = result.stdout.splitlines()
        assert lines[0] == "g=2: 16*t^4"
        assert len(lines) == 2

    def test_computed_euler(self, runner):
        result = invoke(runner, "table", "--which", "euler", "--genus-range", "2..5")
        assert result.stdout.splitlines()[-1] == "g=5: sl2=131328, pgl2=384"

    def test_latex(self, runner):
        result = invoke(runner, "table", "--which", "ip-sl2", "--genus-range", "2", "--format", "latex")
        assert result.stdout.startswith("\\begin{tabular}")
        assert "2 & $1 + t^{2} + 17 t^{4} + 17 t^{6}$ \\\\" in result.stdout

    @pytest.mark.parametrize("extra", [[], ["--paper", "--genus-range", "2..3"]])
    def test_exactly_one_source(self, runner, extra):
        result = invoke(runner, "table", "--which", "euler", *extra)
        assert result.exit_code == EXIT_USAGE

    def test_bad_range(self, runner):
        result = invoke(runner, "table", "--which", "euler", "--genus-range", "5..2")
        assert result.exit_code == EXIT_USAGE
