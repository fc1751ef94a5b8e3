import random
from fractions import Fraction

import pytest

from ellcob.matrices import RationalMatrix, column_hnf, solve_integer


class TestRationalMatrix:
    def test_inverse_round_trip(self):
        rng = random.Random(12)
        eye = RationalMatrix.identity(4)
        for _ in range(10):
            m = RationalMatrix([[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)])
            if m.determinant() == 0:
                continue
            assert m * m.inverse() == eye
            assert m.inverse() * m == eye

    def test_determinant_multiplicative(self):
        rng = random.Random(13)
        for _ in range(10):
            a = RationalMatrix([[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)])
            b = RationalMatrix([[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)])
            assert (a * b).determinant() == a.determinant() * b.determinant()

    def test_singular(self):
        m = RationalMatrix([[1, 2], [2, 4]])
        assert m.determinant() == 0
        with pytest.raises(ValueError, match="singular"):
            m.inverse()

    def test_solve(self):
        m = RationalMatrix([[2, 1], [1, 3]])
        x = m.solve([5, 10])
        assert x == (Fraction(1), Fraction(3))

    def test_apply(self):
        m = RationalMatrix([[1, 2], [0, 1]])
        assert m.apply([3, 4]) == (11, 4)

    def test_integral_checks(self):
        assert RationalMatrix([[1, 2], [3, 4]]).is_integral()
        assert not RationalMatrix([[Fraction(1, 2)]]).is_integral()
        with pytest.raises(ValueError):
            RationalMatrix([[Fraction(1, 2)]]).to_int_rows()


class TestColumnHNF:
    def test_lower_triangular_positive_pivots(self):
        rng = random.Random(14)
        for _ in range(20):
            rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            if RationalMatrix(rows).determinant() == 0:
                continue
            h = column_hnf(rows)
            for i in range(4):
                assert h[i][i] > 0
                for j in range(i + 1, 4):
                    assert h[i][j] == 0
                for j in range(i):
                    assert 0 <= h[i][j] < h[i][i]

    def test_preserves_the_column_lattice(self):
        rng = random.Random(15)
        for _ in range(10):
            rows = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            m = RationalMatrix(rows)
            if m.determinant() == 0:
                continue
            h = column_hnf(rows)
            # same lattice <=> both change-of-basis matrices are integral
            hm = RationalMatrix(h)
            assert (m.inverse() * hm).is_integral()
            assert (hm.inverse() * m).is_integral()

    def test_negative_pivot_flipped(self):
        assert column_hnf([[-5]]) == [[5]]

    def test_rank_deficient_row_skipped(self):
        h = column_hnf([[0, 0], [2, 3]])
        assert h[0] == [0, 0]
        assert h[1][0] == 1  # gcd(2, 3)


class TestSolveInteger:
    def test_integral_solution(self):
        assert solve_integer([[2, 0], [0, 3]], [4, 9]) == (2, 3)

    def test_no_integral_solution(self):
        assert solve_integer([[2, 0], [0, 3]], [1, 3]) is None
