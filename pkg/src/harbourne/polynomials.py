"""
Symbolic forms of the cover invariants and of the C_n family

The numeric modules evaluate everything with exact rationals; this module
keeps the same formulas as sympy polynomials so identities can be confirmed
coefficient by coefficient rather than at sample points.
"""

from typing import TYPE_CHECKING

import sympy as sp

if TYPE_CHECKING:
    from harbourne.arrangement import Arrangement

n = sp.Symbol("n", integer=True, positive=True)


def euler_polynomial(f0: int, f1: int, genus_minus_one: int, t2: int) -> sp.Poly:
    """e(X_n)/n^(d-2) as a polynomial in n"""
    g1 = sp.Integer(genus_minus_one)
    return sp.Poly((2 * g1 + f1 - f0) * n**2 + 2 * (-g1 + f0 - f1) * n + f1 - t2, n)


def canonical_polynomial(f0: int, f1: int, genus_minus_one: int, t2: int) -> sp.Poly:
    """K^2/n^(d-2) as a polynomial in n"""
    g1 = sp.Integer(genus_minus_one)
    return sp.Poly(
        (2 * g1 + 3 * f1 - 4 * f0) * n**2 + 4 * (f0 - f1 - g1) * n - f0 + f1 + t2 + 2 * g1, n
    )


def defect_polynomial(f0: int, f1: int, genus_minus_one: int, t2: int) -> sp.Poly:
    """(3 c2 - K^2)/n^(d-2) as a polynomial in n"""
    g1 = sp.Integer(genus_minus_one)
    return sp.Poly(
        (f0 + 4 * g1) * n**2 + 2 * (f0 - f1 - g1) * n + 2 * f1 + f0 - 4 * t2 - 2 * g1, n
    )


def _arrangement_data(arr: "Arrangement"):
    f0, f1, _ = arr.moments
    return f0, f1, arr.genus_minus_one, arr.spectrum.t(2)


def defect_is_three_euler_minus_canonical(arr: "Arrangement") -> bool:
    """Check defect = 3 e - K^2 as polynomials in n"""
    data = _arrangement_data(arr)
    difference = 3 * euler_polynomial(*data) - canonical_polynomial(*data) - defect_polynomial(*data)
    return difference.is_zero


def defect_is_ball_quotient_square(arr: "Arrangement") -> bool:
    """Check defect = f0 (n - 3)^2 as polynomials in n"""
    data = _arrangement_data(arr)
    target = sp.Poly(data[0] * (n - 3) ** 2, n)
    return (defect_polynomial(*data) - target).is_zero


def cn_h_expression(pairing_coefficient: int = 4) -> sp.Expr:
    """
    H(C_n, Sing C_n) as a rational function of n

    Args:
        pairing_coefficient: c in sum_{i<j} C_i.C_j = c (n^2 - 3)
    """
    components = sp.Rational(4, 3) * (n**2 - 3)
    c_bar_square = -(n**2 - 9) * components + 2 * pairing_coefficient * (n**2 - 3)
    s = 12 + sp.Rational(1, 3) * (n**2 - 3) * (n**2 - 9)
    return c_bar_square / s


def cn_gap_expression() -> sp.Expr:
    """Closed form of H(C_n, Sing C_n) + 4"""
    return (24 * n**2 + 72) / ((n**2 - 3) * (n**2 - 9) + 36)


def cn_gap_identity() -> bool:
    """Check that H(C_n, Sing C_n) + 4 simplifies to the closed form"""
    return sp.simplify(cn_h_expression() + 4 - cn_gap_expression()) == 0


def cn_limit(pairing_coefficient: int = 4) -> sp.Expr:
    """Limit of H(C_n, Sing C_n) as n grows"""
    return sp.limit(cn_h_expression(pairing_coefficient), n, sp.oo)
