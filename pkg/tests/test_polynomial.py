"""Exact polynomial arithmetic and the Ehrhart-side conversions."""

from fractions import Fraction

import pytest

from sepkit.polynomial import (
    HStar,
    NegativeHStar,
    NonIntegerCount,
    NotPalindromic,
    ONE_PLUS_T,
    Poly,
    TWO_X_PLUS_1,
    cross_coefficients,
    cross_polynomial,
    cross_recombine,
    ehrhart_from_hstar,
    fraction_str,
    gamma_vector,
    gammalemma_check,
    hstar_from_ehrhart,
    is_symmetric_about_cl,
    mul_2x_plus_1_series,
    series_numerator,
)


def H(coeffs, dim):
    return HStar(Poly(coeffs), dim)


class TestPolyCore:
    def test_arithmetic_and_normalization(self):
        p = Poly((1, 2, 0, 0))
        assert p.degree == 1
        assert p + Poly((0, -2)) == Poly((1,))
        assert Poly((1, 1)) * Poly((1, -1)) == Poly((1, 0, -1))
        assert (Poly((1, 1)) ** 3)[2] == 3
        assert Poly((2, 4)) / 2 == Poly((1, 2))

    def test_divmod_and_gcd(self):
        a = Poly((1, 1)) * Poly((2, 1)) * Poly((0, 1))
        q, r = a.divmod(Poly((1, 1)))
        assert r.is_zero() and q == Poly((2, 1)) * Poly((0, 1))
        assert a.gcd(Poly((1, 1)) * Poly((5, 1))) == Poly((1, 1))

    def test_compose_and_eval(self):
        p = Poly((1, 0, 1))  # 1 + x^2
        assert p.compose(Poly((-1, -1))) == Poly((2, 2, 1))
        assert p(Fraction(1, 2)) == Fraction(5, 4)

    def test_squarefree_part(self):
        p = Poly((1, 1)) ** 3 * Poly((3, 1))
        assert p.squarefree_part() == (Poly((1, 1)) * Poly((3, 1))).monic()

    def test_immutability(self):
        p = Poly((1, 2))
        with pytest.raises(AttributeError):
            p.coeffs = ()


class TestHStarValidation:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            H((1, -1), 1)

    def test_rejects_non_unit_constant(self):
        with pytest.raises(ValueError):
            H((2, 1), 1)

    def test_rejects_degree_overflow(self):
        with pytest.raises(ValueError):
            H((1, 1, 1), 1)


class TestEhrhartConversion:
    def test_point_polytope(self):
        assert ehrhart_from_hstar(H((1,), 0)) == Poly((1,))

    def test_segment(self):
        assert ehrhart_from_hstar(H((1, 1), 1)) == Poly((1, 2))

    def test_hexagon(self):
        assert ehrhart_from_hstar(H((1, 4, 1), 2)) == Poly((1, 3, 3))

    def test_inverse_examples(self):
        assert hstar_from_ehrhart(Poly((1, 2)), 1).poly == Poly((1, 1))
        assert hstar_from_ehrhart(Poly((1,)), 0).poly == Poly((1,))
        # Ehrhart series of the 2-dimensional cross-polytope
        assert hstar_from_ehrhart(Poly((1, 2, 2)), 2).poly == Poly((1, 2, 1))

    def test_non_integer_count_rejected(self):
        with pytest.raises(NonIntegerCount):
            hstar_from_ehrhart(Poly((1, Fraction(1, 2))), 1)

    def test_negative_hstar_rejected(self):
        with pytest.raises(NegativeHStar):
            hstar_from_ehrhart(Poly((1, 7, -6)), 2)

    @pytest.mark.parametrize("dim", range(13))
    def test_round_trip(self, dim):
        # a palindromic-ish h* with growing coefficients
        coeffs = [1] + [3 * i + 2 for i in range(1, dim + 1)]
        h = H(coeffs, dim)
        assert hstar_from_ehrhart(ehrhart_from_hstar(h), dim).poly == h.poly

    def test_e_at_zero_is_one(self):
        for coeffs, d in [((1, 4, 1), 2), ((1, 9, 9, 1), 3), ((1, 1), 1)]:
            assert ehrhart_from_hstar(H(coeffs, d))(0) == 1


class TestSymmetry:
    def test_examples(self):
        assert is_symmetric_about_cl(Poly((1, 2)))
        assert is_symmetric_about_cl(Poly((1, 2, 2)))
        assert not is_symmetric_about_cl(Poly((1, 1)))


class TestGammaVector:
    def test_peeling_examples(self):
        assert gamma_vector(H((1, 5, 5, 1), 3)) == Poly((1, 2))
        assert gamma_vector(H([1, 3, 3, 1], 3)) == Poly((1,))
        assert gamma_vector(H((1, 12, 28, 12, 1), 4)) == Poly((1, 8, 6))

    def test_rejects_non_palindromic(self):
        with pytest.raises(NotPalindromic):
            gamma_vector(H((1, 2, 2), 2))

    @pytest.mark.parametrize("d", range(1, 13))
    def test_recombination_round_trip(self, d):
        coeffs = [1] * (d + 1)
        for i in range(1, (d + 1) // 2):
            coeffs[i] = coeffs[d - i] = i + 2
        h = H(coeffs, d)
        gamma = gamma_vector(h)
        rebuilt = Poly.zero()
        for i in range(gamma.degree + 1):
            rebuilt = rebuilt + gamma[i] * ONE_PLUS_T ** (d - 2 * i) * Poly.x() ** i
        assert rebuilt == h.poly


class TestCrossPolynomials:
    def test_small_values(self):
        assert cross_polynomial(0) == Poly((1,))
        assert cross_polynomial(1) == Poly((1, 2))
        assert cross_polynomial(2) == Poly((1, 2, 2))
        assert cross_polynomial(3) == Poly((1, Fraction(8, 3), 2, Fraction(4, 3)))

    @pytest.mark.parametrize("n", range(2, 21))
    def test_recursion(self, n):
        lhs = cross_polynomial(n)
        rhs = (
            Fraction(1, n) * TWO_X_PLUS_1 * cross_polynomial(n - 1)
            + Fraction(n - 1, n) * cross_polynomial(n - 2)
        )
        assert lhs == rhs

    def test_cross_coefficients_examples(self):
        e22 = ehrhart_from_hstar(H((1, 5, 5, 1), 3))
        assert cross_coefficients(e22, 3) == Poly((Fraction(3, 2), Fraction(-1, 2)))
        assert e22(1) == 9
        assert cross_recombine(cross_coefficients(e22, 3), 3) == e22

        e112 = ehrhart_from_hstar(H((1, 7, 7, 1), 3))
        cc = cross_coefficients(e112, 3)
        assert cc == Poly((2, -1))
        assert e112 == Poly((3, 10, 12, 8)) / 3

        cd = cross_polynomial(6)
        assert cross_coefficients(cd, 6) == Poly((1,))

    @pytest.mark.parametrize("d", range(1, 13))
    def test_cross_round_trip(self, d):
        coeffs = [1] * (d + 1)
        for i in range(1, (d + 1) // 2):
            coeffs[i] = coeffs[d - i] = 2 * i + 3
        e = ehrhart_from_hstar(H(coeffs, d))
        assert cross_recombine(cross_coefficients(e, d), d) == e

    def test_propagates_not_palindromic(self):
        with pytest.raises(NotPalindromic):
            cross_coefficients(Poly((1, 3, 1)), 2)  # numerator not palindromic


class TestSeriesNumerators:
    def test_mul_2x_plus_1_examples(self):
        assert mul_2x_plus_1_series(H((1,), 0)) == Poly((1, 1))
        assert mul_2x_plus_1_series(H((1, 1), 1)) == Poly((1, 6, 1))

    def test_mul_2x_plus_1_matches_series(self):
        # numerator over (1-t)^(d+2) must reproduce (2k+1) E(k) termwise
        h = H((1, 2, 1), 2)
        e = ehrhart_from_hstar(h)
        n = mul_2x_plus_1_series(h)
        from sepkit.polynomial import geometric_series_coeffs

        geo = geometric_series_coeffs(h.dim + 2, 5)
        for k in range(4):
            coeff = sum(n[k - j] * geo[j] for j in range(k + 1))
            assert coeff == (2 * k + 1) * e(k)

    def test_series_numerator_signed_input(self):
        # (2x+1) * E is a legal signed input for the numerator extraction
        e = TWO_X_PLUS_1 * ehrhart_from_hstar(H((1, 1), 1))
        n = series_numerator(e, 2)
        assert n.degree <= 2

    @pytest.mark.parametrize("d", range(1, 7))
    @pytest.mark.parametrize("n", range(0, 4))
    def test_gammalemma_grid(self, d, n):
        assert gammalemma_check(d, n)


def test_fraction_str():
    assert fraction_str(Fraction(3, 2)) == "3/2"
    assert fraction_str(Fraction(-4, 2)) == "-2"
    assert fraction_str(Fraction(0)) == "0"
