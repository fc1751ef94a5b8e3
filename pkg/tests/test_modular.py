import math
from fractions import Fraction

import pytest

from ellcob.series import QSeries, ZSeries
from ellcob.modular import (
    ThetaConstant,
    theta_constant,
    delta1,
    eps1,
    delta2,
    eps2,
    divisor_sum_oracle,
    e4,
    discriminant,
    delta_bar,
    sigma,
    jacobi_solution,
    sinh_half,
    cosh_half,
)


def finite_product_theta3(nu_order, n_factors):
    """Independent oracle: expand prod (1-q^j)(1+q^(j-1/2))^2 term by term."""
    out = QSeries.one(nu_order)
    for j in range(1, n_factors + 1):
        f1 = [Fraction(0)] * nu_order
        f1[0] = Fraction(1)
        if 2 * j < nu_order:
            f1[2 * j] = Fraction(-1)
        f2 = [Fraction(0)] * nu_order
        f2[0] = Fraction(1)
        if 2 * j - 1 < nu_order:
            f2[2 * j - 1] = Fraction(1)
        g = QSeries(f2, nu_order)
        out = out * QSeries(f1, nu_order) * g * g
    return out


class TestThetaConstants:
    def test_theta3_matches_finite_product_oracle(self):
        t3 = theta_constant("theta3", 15)
        assert t3.prefactor_eighths == 0
        assert t3.to_qseries() == finite_product_theta3(15, 10)

    def test_theta3_is_a_sum_of_squares_series(self):
        # Jacobi triple product: theta3(0) = sum over n of q^(n^2 / 2)
        t3 = theta_constant("theta3", 26).to_qseries()
        squares = {n * n for n in range(1, 6)}
        for m in range(26):
            expected = 1 if m == 0 else (2 if m in squares else 0)
            assert t3.coeffs[m] == expected

    def test_theta2_alternating_squares(self):
        t2 = theta_constant("theta2", 26).to_qseries()
        for m in range(26):
            if m == 0:
                assert t2.coeffs[m] == 1
            else:
                n = math.isqrt(m)
                expected = 2 * (-1) ** n if n * n == m else 0
                assert t2.coeffs[m] == expected

    def test_theta1_prefactor_and_triangular_numbers(self):
        t1 = theta_constant("theta1", 24)
        assert t1.prefactor_eighths == 1
        assert t1.body.coeffs[0] == 2
        # body/2 = sum q^(n(n+1)/2) over n >= 0
        half = t1.body * Fraction(1, 2)
        triangulars = {n * (n + 1) // 2 for n in range(10)}
        for m in range(12):
            assert half.coeffs[2 * m] == (1 if m in triangulars else 0)

    def test_theta_vanishes_at_origin(self):
        assert theta_constant("theta", 8).to_qseries() == 0

    def test_prefactor_bookkeeping(self):
        t1 = theta_constant("theta1", 9)
        assert (t1 * t1).prefactor_eighths == 2
        assert (t1 ** 4).prefactor_eighths == 4
        assert (t1 / t1).prefactor_eighths == 0

    def test_fractional_prefactor_export_is_hard_error(self):
        with pytest.raises(ValueError, match="prefactor"):
            theta_constant("theta1", 9).to_qseries()
        with pytest.raises(ValueError, match="prefactor"):
            (theta_constant("theta1", 9) ** 2).to_qseries()

    def test_eps1_from_explicit_theta_product(self):
        n = 13
        prod = theta_constant("theta2", n) ** 4 * theta_constant("theta3", n) ** 4
        assert prod.to_qseries() * Fraction(1, 16) == eps1(n)

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            theta_constant("theta9", 5)


class TestModularParameters:
    def test_displayed_leading_terms(self):
        assert delta1(6).pretty() == "1/4 + 6*q + 6*q^2 + O(q^3)"
        assert eps1(7).coeffs[:5] == (Fraction(1, 16), 0, -1, 0, 7)
        assert delta2(5).coeffs[:3] == (Fraction(-1, 8), -3, -3)
        assert eps2(5).coeffs[:3] == (0, 1, 8)

    def test_divisor_oracle_examples(self):
        assert divisor_sum_oracle("delta1", 9).coefficient_q(3) == 24
        assert divisor_sum_oracle("eps1", 9).coefficient_q(2) == 7
        assert divisor_sum_oracle("eps2", 9).coefficient_q(1) == 8

    def test_theta_path_equals_divisor_path_to_q10(self):
        n = 21
        assert delta1(n) == divisor_sum_oracle("delta1", n)
        assert eps1(n) == divisor_sum_oracle("eps1", n)
        assert delta2(n) == divisor_sum_oracle("delta2", n)
        assert eps2(n) == divisor_sum_oracle("eps2", n)


class TestEisensteinAndDiscriminant:
    def test_sigma(self):
        assert sigma(3, 1) == 1
        assert sigma(3, 2) == 9
        assert sigma(1, 6) == 12

    def test_e4(self):
        s = e4(9)
        assert [s.coefficient_q(n) for n in range(4)] == [1, 240, 2160, 6720]

    def test_discriminant_tau_coefficients(self):
        s = discriminant(13)
        assert [s.coefficient_q(n) for n in range(6)] == [0, 1, -24, 252, -1472, 4830]

    def test_delta_bar(self):
        s = delta_bar(7)
        assert s.coefficient_q(0) == 1
        assert s.coefficient_q(1) == -24


class TestJacobiSolutions:
    def test_f1_reduces_to_two_tanh_half(self):
        z = 16
        f1 = jacobi_solution(1, z, 0).at_q_zero()
        two_tanh = (2 * sinh_half(z)) * cosh_half(z).invert()
        assert f1 == two_tanh
        assert f1.coeffs[1] == 1
        assert f1.coeffs[3] == Fraction(-1, 12)

    def test_f2_reduces_to_two_sinh_half(self):
        z = 16
        f2 = jacobi_solution(2, z, 0).at_q_zero()
        assert f2 == 2 * sinh_half(z)
        assert f2.coeffs[3] == Fraction(1, 24)

    def test_solutions_are_odd_and_normalized(self):
        for kind in (1, 2):
            sol = jacobi_solution(kind, 8, 2)
            assert sol.series.parity == "odd"
            assert sol.series.coeffs[1] == 1
            assert sol.series.coeffs[0] == 0

    @pytest.mark.parametrize("kind", [1, 2])
    def test_quartic_residual_vanishes(self, kind):
        q_order = 3
        nu = 2 * q_order + 1
        sol = jacobi_solution(kind, 10, q_order)
        d = (delta1 if kind == 1 else delta2)(nu)
        e = (eps1 if kind == 1 else eps2)(nu)
        res = sol.quartic_residual(d, e)
        assert res == 0
        assert res.order >= 9

    def test_mismatched_parameters_fail_the_quartic(self):
        sol = jacobi_solution(2, 8, 2)
        res = sol.quartic_residual(delta1(5), eps1(5))
        assert res != 0
