"""Tests for the Dolbeault-side intersection E-polynomials and desingularization."""
import pytest

from src.algebra.laurent import Q, T, U, V
from src.algebra.operations import substitute
from src.invariants.desingularization import e_t, e_t_betti_closed_form
from src.invariants.dolbeault import diagonal_ie, e_dol_sm_sl2, ie_dol, ie_dol_sl2
from src.invariants.models import Group, InvariantKind, Side
from src.invariants.poincare import ip, ip_sl2
from src.invariants.purity import diagonal_from_ip
from src.invariants.variants import ie_dol_var


def swap(p):
    return substitute(p, {"u": V, "v": U})


@pytest.mark.parametrize("g", range(2, 5))
def test_smooth_locus_is_symmetric_of_top_weight(g):
    e_sm = e_dol_sm_sl2(g)
    assert swap(e_sm) == e_sm
    assert e_sm.degree() == 2 * (6 * g - 6)
    assert e_sm.is_integral


def test_genus_two_diagonal():
    result = ie_dol_sl2(2)
    assert diagonal_ie(result.poly) == 17 * T**6 + 17 * T**8 + T**10 + T**12
    assert result.kind is InvariantKind.IE
    assert result.spec.side is Side.DOLBEAULT


def test_caller_supplied_smooth_locus():
    assert ie_dol_sl2(3, e_sm=e_dol_sm_sl2(3)).poly == ie_dol_sl2(3).poly


@pytest.mark.parametrize("g", range(2, 7))
def test_purity_gatekeeper(g):
    dolbeault = ie_dol_sl2(g).poly
    assert diagonal_ie(dolbeault) == diagonal_from_ip(ip_sl2(g).poly, 6 * g - 6)


@pytest.mark.parametrize("g", range(2, 5))
@pytest.mark.parametrize("group", [Group.PGL2, Group.GL2])
def test_purity_for_other_groups(group, g):
    dolbeault = ie_dol(group, g)
    assert diagonal_ie(dolbeault.poly) == diagonal_from_ip(ip(group, g).poly, dolbeault.spec.dimension)


@pytest.mark.parametrize("g", range(2, 7))
def test_variant_part(g):
    assert ie_dol(Group.SL2, g).poly - ie_dol_var(g) == ie_dol(Group.PGL2, g).poly


def test_gl2_factor():
    g = 2
    factor = (U * V) ** g * ((1 - U) * (1 - V)) ** g
    assert ie_dol(Group.GL2, g).poly == factor * ie_dol(Group.PGL2, g).poly


@pytest.mark.parametrize("g", range(2, 6))
def test_ie_dol_is_symmetric(g):
    p = ie_dol(Group.SL2, g).poly
    assert swap(p) == p
    assert p.is_integral


class TestDesingularization:
    def test_betti_genus_two(self):
        assert e_t_betti_closed_form(2, 16) == 1 + 17 * Q + 49 * Q**2 + 54 * Q**3 + 49 * Q**4 + 17 * Q**5 + Q**6
        assert e_t_betti_closed_form(2, 1) == 1 + 2 * Q + 4 * Q**2 + 9 * Q**3 + 4 * Q**4 + 2 * Q**5 + Q**6

    @pytest.mark.parametrize("g", range(2, 9))
    def test_betti_routes_agree(self, g):
        result = e_t(Side.BETTI, g)
        assert result.poly.evaluate(q=1) > 0

    @pytest.mark.parametrize("g", range(2, 5))
    @pytest.mark.parametrize("group", [Group.SL2, Group.PGL2])
    def test_dolbeault_routes_agree(self, group, g):
        result = e_t(Side.DOLBEAULT, g, group)
        assert swap(result.poly) == result.poly
        assert result.torsion_parameter_used == (2 ** (2 * g) if group is Group.SL2 else 1)

    def test_gl2_is_unsupported(self):
        from src.exceptions.custom import UnsupportedGroupError

        with pytest.raises(UnsupportedGroupError):
            e_t(Side.BETTI, 2, Group.GL2)


class TestTorsionLabel:
    def test_other_torsion_stays_sl2(self):
        result = ie_dol_sl2(2, torsion_N=7)
        assert result.spec.group is Group.SL2
        assert result.torsion_parameter_used == 7
        assert result.provenance.endswith(", N=7")

    def test_unit_torsion_is_pgl2(self):
        result = ie_dol_sl2(2, torsion_N=1)
        assert result.spec.group is Group.PGL2
        assert result.provenance.endswith(", N=1")
        assert result.poly == ie_dol(Group.PGL2, 2).poly

    def test_default_torsion_has_no_note(self):
        assert "N=" not in ie_dol_sl2(2).provenance
        assert "N=" not in ip_sl2(2).provenance
