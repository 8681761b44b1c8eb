"""Tests for strata polynomials, splits and cone truncations."""
from fractions import Fraction

import pytest

from src.algebra.laurent import Q, T, U, V, LaurentPoly
from src.algebra.operations import palindrome_check
from src.exceptions.custom import NegativePrimitiveError, StrataError, UnsupportedGroupError
from src.invariants.models import Group, ModuliSpec, Side
from src.strata.cones import (
    cone_ih_truncation,
    ih_normal_slice_sigma,
    ih_normal_slice_sigma_prime,
    ih_normal_slice_sigma_prime_via_cone,
    ih_normal_slice_sigma_via_cone,
)
from src.strata.exceptional import (
    e_exceptional,
    fiber_sum_closed_form,
    ie_normal_slice_omega,
    ie_normal_slice_omega_via_truncation,
    ie_omega_r,
)
from src.strata.incidence import e_grassmannian_iso, incidence_poincare
from src.strata.models import BettiVector
from src.strata.splits import e_sigma_omega, e_torus_split, e_tstar_jac_split, sym2_split

GENERA = range(2, 9)


@pytest.mark.parametrize("g", GENERA)
def test_torus_split_sums_to_total(g):
    split = e_torus_split(g)
    assert split.total == (1 - Q) ** (2 * g)
    assert split.difference == (1 + Q) ** (2 * g)


@pytest.mark.parametrize("g", GENERA)
def test_tstar_jac_split_sums_to_total(g):
    split = e_tstar_jac_split(g)
    assert split.total == (U * V) ** g * ((1 - U) * (1 - V)) ** g


def test_torus_split_genus_two():
    split = e_torus_split(2)
    assert split.plus == 1 + 6 * Q**2 + Q**4
    assert split.minus == -4 * Q - 4 * Q**3


def test_sym2_split():
    split = sym2_split(1 + Q)
    # Sym^2 of a point plus a line: 1 + q + q^2
    assert split.plus == 1 + Q + Q**2
    assert split.total == (1 + Q) ** 2


def test_split_rejects_genus_zero():
    with pytest.raises(StrataError):
        e_torus_split(0)


def test_sigma_omega_per_group():
    sigma, omega = e_sigma_omega(ModuliSpec(group=Group.SL2, side=Side.BETTI, genus=3))
    assert omega == 64
    assert sigma == e_torus_split(3)
    sigma, omega = e_sigma_omega(ModuliSpec(group=Group.GL2, side=Side.BETTI, genus=2))
    assert omega == (Q - 1) ** 4
    assert sigma.total == omega * omega
    with pytest.raises(UnsupportedGroupError):
        e_sigma_omega(ModuliSpec(group=Group.PGL2, side=Side.BETTI, genus=2))


@pytest.mark.parametrize("g", GENERA)
def test_incidence_is_palindromic(g):
    incidence = incidence_poincare(g)
    assert palindrome_check(incidence.full, Fraction(4 * g - 7, 2))
    assert incidence.split.total == incidence.full


def test_incidence_genus_two():
    incidence = incidence_poincare(2)
    assert incidence.full == 1 + Q
    assert incidence.betti_vector().dims == (1, 0, 1)


def test_grassmannians():
    assert e_grassmannian_iso(2, 2).poly == 1 + Q + Q**2 + Q**3
    degenerate = e_grassmannian_iso(3, 2)
    assert degenerate.degenerate
    assert degenerate.poly.is_zero
    assert not e_grassmannian_iso(3, 3).degenerate
    with pytest.raises(ValueError):
        e_grassmannian_iso(4, 3)


def test_exceptional_strata_genus_two():
    strata = e_exceptional(2)
    assert strata.degenerate == frozenset({"d1", "d13"})
    assert strata.fiber_sum == 1 + 2 * Q + 3 * Q**2 + 3 * Q**3 + 2 * Q**4 + Q**5


@pytest.mark.parametrize("g", GENERA)
def test_fiber_sum_matches_closed_form(g):
    assert e_exceptional(g).fiber_sum == fiber_sum_closed_form(g)


@pytest.mark.parametrize("g", GENERA)
def test_normal_slices_two_routes(g):
    assert ie_normal_slice_omega(g) == ie_normal_slice_omega_via_truncation(g)
    assert ih_normal_slice_sigma(g) == ih_normal_slice_sigma_via_cone(g)
    assert ih_normal_slice_sigma_prime(g) == ih_normal_slice_sigma_prime_via_cone(g)


def test_omega_r_genus_two():
    # (1 - q^4)(1 - q^4) / ((1 - q)(1 - q^2))
    assert ie_omega_r(2) == (1 + Q + Q**2 + Q**3) * (1 + Q**2)


class TestCones:
    def test_projective_plane(self):
        plane = BettiVector(dims=(1, 0, 1, 0, 1))
        assert cone_ih_truncation(plane, 3) == LaurentPoly.const(1)
        assert cone_ih_truncation(plane, 5) == LaurentPoly.const(1)

    def test_cone_dimension_beyond_top_degree(self):
        # H^6 of the plane is zero while H^4 is not, so no Lefschetz decomposition below degree 6
        with pytest.raises(NegativePrimitiveError):
            cone_ih_truncation(BettiVector(dims=(1, 0, 1, 0, 1)), 7)
        with pytest.raises(NegativePrimitiveError):
            cone_ih_truncation(BettiVector(dims=(1, 0, 1)), 6)

    def test_quadric_surface(self):
        quadric = BettiVector(dims=(1, 0, 2, 0, 1))
        assert cone_ih_truncation(quadric, 3) == 1 + T**2

    def test_odd_degrees_are_kept(self):
        curve = BettiVector(dims=(1, 4, 1))
        assert cone_ih_truncation(curve, 2) == 1 + 4 * T

    def test_failure_of_hard_lefschetz(self):
        with pytest.raises(NegativePrimitiveError):
            cone_ih_truncation(BettiVector(dims=(1, 0, 0, 0, 1)), 5)


def test_betti_vector_from_poincare():
    assert BettiVector.from_poincare(1 + 3 * Q + Q**2).dims == (1, 0, 3, 0, 1)
    assert BettiVector.from_poincare(LaurentPoly()).dims == ()
    with pytest.raises(StrataError):
        BettiVector.from_poincare(1 - Q)
