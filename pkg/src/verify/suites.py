"""Verification suites: each check recomputes an identity and reports PASS or FAIL per genus."""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict

from src.algebra.laurent import LaurentPoly
from src.algebra.operations import palindrome_check
from src.config.constants import CORRECTION_EXPANSION_MIN_GENUS, SUITE_CHOICES
from src.config.settings import Settings
from src.dt.assembly import assemble_ie, e_d2_circ, invert_ie
from src.dt.multiplicities import a_coeffs, a_coeffs_from_slices, b_coeffs, multiplicity_sums, stalk_identity_holds
from src.exceptions.custom import CharVarError
from src.invariants.betti import euler_char, ie_betti
from src.invariants.desingularization import e_t
from src.invariants.dolbeault import diagonal_ie, ie_dol
from src.invariants.models import Group, InvariantResult, ModuliSpec, Side
from src.invariants.poincare import ip, ip_low_order_check, ip_minus_p_expansion, p
from src.invariants.purity import diagonal_from_ip
from src.invariants.transforms import transform_gl2
from src.invariants.variants import variant_polys
from src.storage.cache import ResultCache
from src.strata.cones import (
    ih_normal_slice_sigma,
    ih_normal_slice_sigma_prime,
    ih_normal_slice_sigma_prime_via_cone,
    ih_normal_slice_sigma_via_cone,
)
from src.strata.exceptional import (
    e_exceptional,
    ie_normal_slice_omega,
    ie_normal_slice_omega_via_truncation,
    ie_omega_r,
    ie_omega_r_via_omega_s,
)
from src.strata.incidence import incidence_poincare
from src.strata.splits import e_sigma_omega, e_torus_split
from src.utils.decorators import measure_time
from src.verify.golden import GoldenTables, complete_palindromic, load_golden_tables

SUITES = tuple(s for s in SUITE_CHOICES if s != "all")


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    check: str
    genus: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}:{self.check} g={self.genus}"
        return f"{text} [{self.detail}]" if self.detail else text

    def sort_key(self) -> tuple[int, int, str]:
        return SUITES.index(self.suite), self.genus, self.check


class Engine:
    """Memoized access to the invariants the suites share."""

    def __init__(self, cache: Optional[ResultCache] = None):
        self.cache = cache if cache is not None else ResultCache()

    def ie_betti(self, group: Group, g: int) -> InvariantResult:
        return self.cache.get_or_compute(("ie", "betti", group, g), lambda: ie_betti(group, g))

    def ie_dol(self, group: Group, g: int) -> InvariantResult:
        return self.cache.get_or_compute(("ie", "dolbeault", group, g), lambda: ie_dol(group, g))

    def ip(self, group: Group, g: int) -> InvariantResult:
        return self.cache.get_or_compute(("ip", group, g), lambda: ip(group, g))

    def p(self, group: Group, g: int) -> InvariantResult:
        return self.cache.get_or_compute(("p", group, g), lambda: p(group, g))


Check = Callable[[], bool]


def _run(suite: str, g: int, checks: Iterable[tuple[str, Check]]) -> list[CheckResult]:
    results = []
    for name, check in checks:
        try:
            passed, detail = check(), ""
        except CharVarError as e:
            passed, detail = False, str(e)
        except Exception as e:
            logger.exception(f"{suite}:{name} crashed for g={g}")
            passed, detail = False, f"{type(e).__name__}: {e}"
        if not passed:
            logger.warning(f"{suite}:{name} failed for g={g} {detail}".rstrip())
        results.append(CheckResult(suite=suite, check=name, genus=g, passed=passed, detail=detail))
    return results


def palindromy_checks(g: int, engine: Engine) -> list[tuple[str, Check]]:
    def ie_about_middle(group: Group) -> Check:
        def check() -> bool:
            result = engine.ie_betti(group, g)
            return palindrome_check(result.poly, Fraction(result.spec.dimension, 2))

        return check

    def e_t_betti() -> bool:
        result = e_t(Side.BETTI, g)
        return palindrome_check(result.poly, 3 * g - 3)

    def even_in_q() -> bool:
        return all(e[3] % 2 == 0 for e, _ in engine.ie_betti(Group.SL2, g).poly.items())

    def incidence() -> bool:
        return palindrome_check(incidence_poincare(g).full, Fraction(4 * g - 7, 2))

    def variants() -> bool:
        variant_polys(g)
        return True

    return [
        ("ie_betti_sl2", ie_about_middle(Group.SL2)),
        ("ie_betti_pgl2", ie_about_middle(Group.PGL2)),
        ("ie_betti_gl2", ie_about_middle(Group.GL2)),
        ("ie_betti_sl2_even", even_in_q),
        ("e_t_betti", e_t_betti),
        ("incidence", incidence),
        ("variants", variants),
    ]


def purity_checks(g: int, engine: Engine) -> list[tuple[str, Check]]:
    def for_group(group: Group) -> Check:
        def check() -> bool:
            dolbeault = engine.ie_dol(group, g)
            poincare = engine.ip(group, g)
            return diagonal_ie(dolbeault.poly) == diagonal_from_ip(poincare.poly, dolbeault.spec.dimension)

        return check

    return [(f"diagonal_{group.value}", for_group(group)) for group in Group]


def table_checks(g: int, engine: Engine, golden: GoldenTables) -> list[tuple[str, Check]]:
    checks: list[tuple[str, Check]] = []
    if g in golden.ie_sl2.rows:
        row = golden.ie_sl2.row(g)
        checks.append(("ie_sl2", lambda: engine.ie_betti(Group.SL2, g).poly.truncate(3 * g - 3) == row))
        checks.append(("ie_sl2_completed", lambda: engine.ie_betti(Group.SL2, g).poly == complete_palindromic(row, 3 * g - 3)))
    if g in golden.ip_sl2.rows:
        checks.append(("ip_sl2", lambda: engine.ip(Group.SL2, g).poly == golden.ip_sl2.row(g)))
    if g in golden.ip_minus_p.rows:
        checks.append(
            ("ip_minus_p", lambda: engine.ip(Group.SL2, g).poly - engine.p(Group.SL2, g).poly == golden.ip_minus_p.row(g))
        )
    for group in (Group.SL2, Group.PGL2):
        printed = golden.euler.get(group.value, {})
        if g in printed:
            checks.append((f"euler_{group.value}", lambda group=group, value=printed[g]: euler_char(group, g) == value))
    return checks


def identity_checks(g: int, engine: Engine) -> list[tuple[str, Check]]:
    def sums() -> bool:
        multiplicity_sums(g)
        return True

    def a_routes() -> bool:
        return a_coeffs(g) == a_coeffs_from_slices(g)

    def b_symmetric() -> bool:
        return b_coeffs(g).is_symmetric()

    def omega_s() -> bool:
        e_exceptional(g)
        return True

    def omega_r() -> bool:
        ceil_sum, _ = multiplicity_sums(g)
        return ie_omega_r(g) == ie_omega_r_via_omega_s(g, ceil_sum)

    def slices() -> bool:
        return (
            ie_normal_slice_omega(g) == ie_normal_slice_omega_via_truncation(g)
            and ih_normal_slice_sigma(g) == ih_normal_slice_sigma_via_cone(g)
            and ih_normal_slice_sigma_prime(g) == ih_normal_slice_sigma_prime_via_cone(g)
        )

    def betti_round_trip() -> bool:
        result = engine.ie_betti(Group.SL2, g)
        sigma = e_torus_split(g)
        omega = LaurentPoly.const(result.torsion_parameter_used)
        return assemble_ie(invert_ie(result.poly, sigma, omega, g), sigma, omega, g) == result.poly

    def dolbeault_two_route() -> bool:
        engine.ie_dol(Group.SL2, g)
        return True

    def gamma_split() -> bool:
        variants = variant_polys(g)
        return (
            engine.ie_betti(Group.SL2, g).poly - variants.ie_b_var == engine.ie_betti(Group.PGL2, g).poly
            and engine.ie_dol(Group.SL2, g).poly - variants.ie_dol_var == engine.ie_dol(Group.PGL2, g).poly
            and engine.ip(Group.SL2, g).poly - variants.ip_var == engine.ip(Group.PGL2, g).poly
        )

    def gl2_transform() -> bool:
        return (
            transform_gl2(engine.ie_betti(Group.PGL2, g)).poly == engine.ie_betti(Group.GL2, g).poly
            and transform_gl2(engine.ie_dol(Group.PGL2, g)).poly == engine.ie_dol(Group.GL2, g).poly
            and transform_gl2(engine.ip(Group.PGL2, g)).poly == engine.ip(Group.GL2, g).poly
        )

    def gl2_strata() -> bool:
        gl2 = ModuliSpec(group=Group.GL2, side=Side.BETTI, genus=g)
        sigma, omega = e_sigma_omega(gl2)
        lhs = invert_ie(engine.ie_betti(Group.GL2, g).poly, sigma, omega, g)
        rhs = omega * invert_ie(engine.ie_betti(Group.PGL2, g).poly, e_torus_split(g), LaurentPoly.const(1), g)
        return lhs == rhs

    def desingularization() -> bool:
        for side in Side:
            e_d2_circ(side, g)
            e_t(side, g)
        return True

    return [
        ("multiplicity_sums", sums),
        ("a_two_routes", a_routes),
        ("b_symmetric", b_symmetric),
        ("stalk", lambda: stalk_identity_holds(g)),
        ("omega_s", omega_s),
        ("omega_r", omega_r),
        ("normal_slices", slices),
        ("ie_betti_round_trip", betti_round_trip),
        ("ie_dol_two_route", dolbeault_two_route),
        ("gamma_split", gamma_split),
        ("gl2_transform", gl2_transform),
        ("gl2_strata", gl2_strata),
        ("e_t_two_route", desingularization),
    ]


def expansion_checks(g: int, engine: Engine) -> list[tuple[str, Check]]:
    checks: list[tuple[str, Check]] = [("ip_low_order", lambda: ip_low_order_check(g))]
    if g >= CORRECTION_EXPANSION_MIN_GENUS:

        def correction() -> bool:
            ip_minus_p_expansion(g)
            return True

        checks.append(("ip_minus_p_order_6", correction))
    return checks


def _suite_checks(suite: str, g: int, engine: Engine, golden: GoldenTables) -> list[tuple[str, Check]]:
    if suite == "palindromy":
        return palindromy_checks(g, engine)
    if suite == "purity":
        return purity_checks(g, engine)
    if suite == "tables":
        return table_checks(g, engine, golden)
    if suite == "identities":
        return identity_checks(g, engine)
    return expansion_checks(g, engine)


def expand_suites(suite: str) -> tuple[str, ...]:
    return SUITES if suite == "all" else (suite,)


@measure_time
def run_suites(suite: str, genus_min: int, genus_max: int, settings: Settings) -> list[CheckResult]:
    """Run the named suite (or all) over the genus range, fanned out across threads.

    Results come back sorted by suite, genus and check name.
    """
    golden = load_golden_tables(settings.golden_tables_path)
    engine = Engine()
    jobs = [(s, g) for s in expand_suites(suite) for g in range(genus_min, genus_max + 1)]
    logger.info(f"Running {len(jobs)} suite jobs on {settings.workers} workers")

    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        futures = [pool.submit(lambda s=s, g=g: _run(s, g, _suite_checks(s, g, engine, golden))) for s, g in jobs]
        results = [r for f in futures for r in f.result()]

    results.sort(key=CheckResult.sort_key)
    logger.info(f"{sum(r.passed for r in results)}/{len(results)} checks passed, {engine.cache.hits} cache hits")
    return results
