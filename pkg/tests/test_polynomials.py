"""
Unit tests for the symbolic forms
"""

import sympy as sp

from harbourne import catalog, polynomials
from harbourne.catalog import diagonal_config, hirzebruch_gauss, holzapfel_eisenstein
from harbourne.polynomials import n
from tests.conftest import abelian_arrangement, random_spectrum


def _as_sympy(value):
    return sp.Rational(value.numerator, value.denominator)


class TestCoverPolynomials:
    """Test polynomials in the branching order"""

    def test_gaussian_coefficients(self):
        data = (1, 4, 0, 0)
        assert polynomials.euler_polynomial(*data).all_coeffs() == [3, -6, 4]
        assert polynomials.canonical_polynomial(*data).all_coeffs() == [8, -12, 3]
        assert polynomials.defect_polynomial(*data).all_coeffs() == [1, -6, 9]

    def test_defect_identity_on_random_arrangements(self, rng):
        for _ in range(50):
            arr = abelian_arrangement(rng, random_spectrum(rng))
            assert polynomials.defect_is_three_euler_minus_canonical(arr)

    def test_ball_quotient_square(self):
        assert polynomials.defect_is_ball_quotient_square(hirzebruch_gauss())
        assert polynomials.defect_is_ball_quotient_square(holzapfel_eisenstein())
        assert not polynomials.defect_is_ball_quotient_square(diagonal_config())


class TestCnExpressions:
    """Test the C_n family in closed form"""

    def test_gap_identity(self):
        assert polynomials.cn_gap_identity()

    def test_limit_is_minus_four(self):
        assert polynomials.cn_limit() == -4

    def test_limit_ignores_pairing(self):
        assert polynomials.cn_limit(12) == -4

    def test_matches_exact_values(self):
        for value in (3, 9, 21, 99):
            assert polynomials.cn_h_expression().subs(n, value) == _as_sympy(catalog.cn_h_value(value).h)
            assert polynomials.cn_gap_expression().subs(n, value) == _as_sympy(catalog.cn_gap(value))

    def test_incidence_pairing(self):
        expected = catalog.cn_h_value(9, catalog.PAIRING_INCIDENCE).h
        assert polynomials.cn_h_expression(12).subs(n, 9) == _as_sympy(expected)
