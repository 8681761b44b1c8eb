"""Incidence variety and isotropic Grassmannians."""
from src.algebra.laurent import Q
from src.algebra.operations import exact_div
from src.strata.models import IncidencePoincare, SplitPoly, StratumPolynomial


def incidence_poincare(g: int) -> IncidencePoincare:
    """Poincare polynomial of the incidence variety I_{2g-3} in q = t^2, split by the involution."""
    full = exact_div((1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g - 3)), (1 - Q) ** 2)
    plus = exact_div((1 - Q ** (2 * g - 2)) ** 2, (1 - Q**2) * (1 - Q))
    minus = exact_div(Q * (1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g - 4)), (1 - Q**2) * (1 - Q))
    return IncidencePoincare(full=full, split=SplitPoly(plus=plus, minus=minus))


def e_grassmannian_iso(k: int, g: int) -> StratumPolynomial:
    """E-polynomial of the isotropic Grassmannian of k-planes used in the blow-up."""
    if k == 2:
        poly = exact_div((1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g)), (1 - Q) * (1 - Q**2))
    elif k == 3:
        poly = exact_div(
            (1 - Q ** (2 * g - 4)) * (1 - Q ** (2 * g - 2)) * (1 - Q ** (2 * g)),
            (1 - Q) * (1 - Q**2) * (1 - Q**3),
        )
    else:
        raise ValueError(f"Isotropic Grassmannians are used for k = 2 or 3, got {k}")
    return StratumPolynomial(poly=poly, degenerate=poly.is_zero)
