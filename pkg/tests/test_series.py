import math
import random
from fractions import Fraction

import pytest

from ellcob.series import (
    QSeries,
    ZSeries,
    DeltaEpsPoly,
    DELTA,
    EPS,
    rational_from_str,
    rational_to_str,
)


def rand_qseries(rng, order=8, bound=6):
    return QSeries(
        [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(order)], order
    )


class TestRationalStrings:
    def test_round_trip(self):
        for s in ("3/4", "-11/7", "5", "0", "-2"):
            assert rational_to_str(rational_from_str(s)) == s

    def test_reduction(self):
        assert rational_from_str("6/4") == Fraction(3, 2)
        assert rational_to_str(Fraction(6, 4)) == "3/2"


class TestArithmetic:
    def test_difference_of_squares(self):
        a = QSeries([1, 0, 1], 6)   # 1 + nu^2
        b = QSeries([1, 0, -1], 6)  # 1 - nu^2
        assert a * b == QSeries([1, 0, 0, 0, -1], 6)

    def test_zero_identity(self):
        rng = random.Random(0)
        s = rand_qseries(rng)
        assert QSeries.zero(8) + s == s
        assert 0 + s == s

    def test_one_plus_q_squared(self):
        a = QSeries([1, 0, 1], 8)
        assert (a * a).coeffs[:6] == (1, 0, 2, 0, 1, 0)

    def test_ring_axioms_randomized(self):
        rng = random.Random(1)
        for _ in range(25):
            a, b, c = (rand_qseries(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a

    def test_order_min_rule(self):
        a = QSeries([1, 2, 3], 3)
        b = QSeries([1, 1, 1, 1, 1], 5)
        assert (a + b).order == 3
        assert (a * b).order == 3

    def test_mul_order_sharpened_by_valuation(self):
        # a is known below nu^3; multiplying by nu^2*(...) pushes a's unknown
        # tail out to nu^5, so only b's own tail (below nu^4, valuation 0 in a)
        # limits the result.
        a = QSeries([1, 1, 1], 3)
        b = QSeries([0, 0, 1, 5], 4)
        assert (a * b).order == 4
        # and with b fully known as a monomial, the shift is the full valuation
        mono = QSeries([0, 0, 1], 8)
        assert (a * mono).order == 5

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            QSeries([0.5], 1)

    def test_equality_common_range_only(self):
        assert QSeries([1, 2], 2) == QSeries([1, 2, 99], 3)
        assert QSeries([1, 2], 2) != QSeries([1, 3, 0], 3)


class TestInvert:
    def test_geometric_series(self):
        s = QSeries([1, 0, -1], 9).invert()  # 1/(1 - q)
        assert [s.coeffs[2 * n] for n in range(4)] == [1, 1, 1, 1]

    def test_constant_two(self):
        assert QSeries([2], 4).invert() == QSeries([Fraction(1, 2)], 4)

    def test_quartic_inverse(self):
        q = ZSeries([1, 0, -2 * DELTA, 0, EPS], 8)
        r = q.invert()
        assert r.coeffs[2] == 2 * DELTA
        assert r.coeffs[4] == 4 * DELTA ** 2 - EPS
        assert r * q == 1

    def test_randomized_defining_identity(self):
        rng = random.Random(2)
        for _ in range(20):
            s = rand_qseries(rng)
            if s.coeffs[0] == 0:
                continue
            assert s * s.invert() == 1

    def test_not_invertible(self):
        with pytest.raises(ValueError, match="not invertible"):
            QSeries([0, 1], 3).invert()


class TestInvSqrt:
    def test_one(self):
        assert QSeries.one(5).inv_sqrt() == 1

    def test_quartic(self):
        q = ZSeries([1, 0, -2 * DELTA, 0, EPS], 10)
        r = q.inv_sqrt()
        assert r.coeffs[2] == DELTA
        assert r.coeffs[4] == (3 * DELTA ** 2 - EPS) * Fraction(1, 2)
        assert r * r * q == 1

    def test_central_binomials(self):
        s = QSeries([1, 0, -4], 13).inv_sqrt()
        for n in range(6):
            assert s.coeffs[2 * n] == math.comb(2 * n, n)

    def test_randomized_defining_identity(self):
        rng = random.Random(3)
        for _ in range(20):
            s = rand_qseries(rng)
            s = s - s.coeffs[0] + 1  # force constant term 1
            r = s.inv_sqrt()
            assert r.coeffs[0] == 1
            assert r * r * s == 1

    def test_requires_unit_constant(self):
        with pytest.raises(ValueError):
            QSeries([2, 1], 4).inv_sqrt()


class TestCalculus:
    def test_integrate_one(self):
        assert ZSeries([1], 3).integrate() == ZSeries([0, 1], 4)

    def test_integrate_termwise(self):
        s = ZSeries([1, 0, DELTA], 4).integrate()
        assert s.coeffs[1] == 1
        assert s.coeffs[3] == DELTA * Fraction(1, 3)

    def test_derivative_inverts_integrate(self):
        rng = random.Random(4)
        for _ in range(10):
            s = ZSeries([Fraction(rng.randint(-5, 5)) for _ in range(7)], 7)
            assert s.integrate().derivative() == s

    def test_integrate_flips_parity(self):
        assert ZSeries([0, 1], 3, parity="odd").integrate().parity == "even"


class TestCompose:
    def test_identity_argument(self):
        f = ZSeries([2, 1, 5, 7], 4)
        assert f.compose(ZSeries.var(4)) == f

    def test_square_of_sum(self):
        f = ZSeries.monomial(1, 2, 5)
        g = ZSeries([0, 1, 1], 5)
        assert f.compose(g) == ZSeries([0, 0, 1, 2, 1], 5)

    def test_scaling_doubles_weights(self):
        f = ZSeries([0, 0, 0, 1], 6)  # z^3
        two_z = ZSeries([0, 2], 6)
        assert f.compose(two_z) == ZSeries([0, 0, 0, 8], 6)

    def test_requires_zero_constant(self):
        with pytest.raises(ValueError):
            ZSeries([1, 1], 3).compose(ZSeries([1, 1], 3))


class TestReversion:
    def test_identity(self):
        z = ZSeries.var(6)
        assert z.reversion() == z

    def test_z_plus_z_cubed(self):
        f = ZSeries([0, 1, 0, 1], 8)
        g = f.reversion()
        assert g.coeffs[:6] == (0, 1, 0, -1, 0, 3)
        assert f.compose(g) == ZSeries.var(8)

    def test_round_trip_with_cubic(self):
        f = ZSeries([0, 1, 0, DELTA * Fraction(1, 3)], 8)
        g = f.reversion()
        assert g.coeffs[3] == DELTA * Fraction(-1, 3)
        assert g.reversion() == f

    def test_randomized_composition_identity(self):
        rng = random.Random(5)
        for _ in range(10):
            coeffs = [0, 1] + [Fraction(rng.randint(-4, 4)) for _ in range(6)]
            f = ZSeries(coeffs, 8)
            assert f.compose(f.reversion()) == ZSeries.var(8)

    def test_requires_normalized_linear_term(self):
        with pytest.raises(ValueError):
            ZSeries([0, 2, 1], 4).reversion()
        with pytest.raises(ValueError):
            ZSeries([1, 1], 4).reversion()


class TestParity:
    def test_violation_detected(self):
        with pytest.raises(ValueError, match="parity"):
            ZSeries([1, 2, 3], 3, parity="odd")

    def test_product_parity(self):
        odd = ZSeries([0, 1, 0, 5], 4, parity="odd")
        assert (odd * odd).parity == "even"
        assert (odd * (odd * odd)).parity == "odd"

    def test_derivative_flips(self):
        odd = ZSeries([0, 1], 4, parity="odd")
        assert odd.derivative().parity == "even"


class TestExpLog:
    def test_exp_log_round_trip(self):
        rng = random.Random(6)
        for _ in range(10):
            s = QSeries([0] + [Fraction(rng.randint(-4, 4), 2) for _ in range(6)], 7)
            assert s.exp().log() == s

    def test_log_of_geometric(self):
        s = QSeries([1, 1], 6).log()  # log(1 + nu)
        assert s.coeffs[1] == 1
        assert s.coeffs[2] == Fraction(-1, 2)
        assert s.coeffs[3] == Fraction(1, 3)


class TestSerialization:
    def test_terms_round_trip(self):
        s = QSeries([Fraction(1, 4), 0, 6, 0, 6], 6)
        terms = s.to_terms()
        assert terms == [[0, "1/4"], [2, "6"], [4, "6"]]
        assert QSeries.from_terms(terms, 6) == s

    def test_pretty(self):
        s = QSeries([Fraction(1, 4), 0, 6, 0, 6, 0], 6)
        assert s.pretty() == "1/4 + 6*q + 6*q^2 + O(q^3)"
        t = QSeries([0, 1, 8], 3)
        assert t.pretty() == "q^(1/2) + 8*q + O(q^(3/2))"
        assert QSeries.zero(4).pretty() == "0 + O(q^2)"


class TestDeltaEpsPoly:
    def test_grading(self):
        w6 = DELTA ** 6 + DELTA ** 4 * EPS
        assert w6.is_homogeneous(6)
        assert not (DELTA + EPS).is_homogeneous()

    def test_substitute_rationals(self):
        p = 2 * DELTA ** 2 - EPS
        assert p.substitute(Fraction(1, 2), Fraction(3)) == Fraction(-5, 2)

    def test_substitute_series(self):
        d = QSeries([1, 1], 4)
        e = QSeries([0, 2], 4)
        p = DELTA * EPS
        assert p.substitute(d, e) == d * e

    def test_substitute_eps_zero(self):
        p = DELTA ** 2 + EPS * DELTA
        assert p.substitute(Fraction(-1, 8), 0) == Fraction(1, 64)

    def test_str(self):
        assert str(DELTA) == "delta"
        assert str(3 * DELTA ** 2 - EPS) == "3*delta^2 - eps"
        assert str(DeltaEpsPoly.zero()) == "0"

    def test_zero_terms_pruned(self):
        p = DELTA - DELTA
        assert p.is_zero()
        assert p.terms == {}

    def test_division_by_constant_poly(self):
        c = DeltaEpsPoly.constant(Fraction(2))
        assert 1 / c == DeltaEpsPoly.constant(Fraction(1, 2))
        with pytest.raises(ValueError):
            1 / DELTA
