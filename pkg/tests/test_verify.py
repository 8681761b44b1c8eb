"""Tests for the verification suites, golden tables and the result cache."""
from pathlib import Path

import pytest

from src.algebra.laurent import Q
from src.exceptions.custom import ConfigurationError, IdentityMismatchError
from src.invariants.models import Group
from src.storage.cache import ResultCache
from src.verify.golden import complete_palindromic, load_golden_tables
from src.verify.suites import SUITES, CheckResult, Engine, _run, expand_suites, run_suites


class TestCheckResult:
    def test_pass_line(self):
        assert CheckResult(suite="tables", check="ip_sl2", genus=3, passed=True).line() == "PASS tables:ip_sl2 g=3"

    def test_fail_line_carries_detail(self):
        result = CheckResult(suite="purity", check="diagonal_sl2", genus=4, passed=False, detail="mismatch")
        assert result.line() == "FAIL purity:diagonal_sl2 g=4 [mismatch]"

    def test_library_errors_become_failures(self):
        def broken() -> bool:
            raise IdentityMismatchError("routes differ")

        (result,) = _run("identities", 2, [("broken", broken)])
        assert not result.passed
        assert result.detail == "routes differ"

    def test_unexpected_errors_become_failures(self):
        def crashing() -> bool:
            raise ValueError("dimension mismatch")

        results = _run("identities", 3, [("crashing", crashing), ("fine", lambda: True)])
        assert [r.passed for r in results] == [False, True]
        assert results[0].detail == "ValueError: dimension mismatch"

    def test_expand_all(self):
        assert expand_suites("all") == SUITES
        assert expand_suites("purity") == ("purity",)


@pytest.mark.parametrize(
    "suite,high",
    [("palindromy", 5), ("purity", 4), ("tables", 5), ("identities", 4), ("expansion", 7)],
)
def test_suites_pass(settings, suite, high):
    results = run_suites(suite, 2, high, settings)
    assert results
    assert [r.line() for r in results if not r.passed] == []
    assert {r.genus for r in results} == set(range(2, high + 1))


def test_tables_cover_every_printed_row(settings, golden):
    checks = {(r.check, r.genus) for r in run_suites("tables", 2, 5, settings)}
    for g in golden.ie_sl2.genera:
        assert ("ie_sl2", g) in checks
        assert ("ie_sl2_completed", g) in checks
    assert ("euler_pgl2", 5) in checks


def test_results_are_sorted(settings):
    results = run_suites("all", 2, 3, settings)
    assert results == sorted(results, key=CheckResult.sort_key)
    assert results[0].suite == "palindromy"


def test_single_worker_matches(settings):
    serial = settings.model_copy(update={"workers": 1})
    assert run_suites("purity", 2, 3, serial) == run_suites("purity", 2, 3, settings)


class TestGoldenTables:
    def test_rows(self, golden):
        assert golden.ie_sl2.row(2) == 1 + 17 * Q**2
        assert golden.euler["sl2"][4] == 8256
        assert golden.table("ip-minus-p") is golden.ip_minus_p

    def test_euler_is_not_a_polynomial_table(self, golden):
        with pytest.raises(KeyError):
            golden.table("euler")

    def test_missing_file(self, tmp_path: Path):
        with pytest.raises(ConfigurationError):
            load_golden_tables(tmp_path / "absent.yaml")

    def test_malformed_file(self, tmp_path: Path):
        path = tmp_path / "tables.yaml"
        path.write_text("ie_sl2: [1, 2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_golden_tables(path)

    def test_wrong_shape(self, tmp_path: Path):
        path = tmp_path / "tables.yaml"
        path.write_text("ie_sl2: {variable: q}\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_golden_tables(path)

    def test_complete_palindromic(self):
        assert complete_palindromic(1 + 17 * Q**2, 3) == 1 + 17 * Q**2 + 17 * Q**4 + Q**6
        assert complete_palindromic(1 - 4 * Q**2 + 75 * Q**4 + 384 * Q**6, 6).coefficient(12) == 1


class TestResultCache:
    def test_computes_once(self):
        cache = ResultCache()
        calls = []

        def compute():
            calls.append(1)
            return "value"

        assert cache.get_or_compute(("k", 1), compute) == "value"
        assert cache.get_or_compute(("k", 1), compute) == "value"
        assert len(calls) == 1
        assert cache.hits == 1
        assert len(cache) == 1

    def test_get_and_clear(self):
        cache = ResultCache()
        assert cache.get("missing") is None
        cache.set("k", 3)
        assert cache.get("k") == 3
        cache.clear()
        assert len(cache) == 0
        assert cache.hits == 0

    def test_engine_memoizes(self):
        cache = ResultCache()
        engine = Engine(cache)
        first = engine.ip(Group.SL2, 2)
        assert engine.ip(Group.SL2, 2) is first
        assert cache.hits == 1
