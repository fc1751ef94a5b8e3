"""Small exact rational matrices and integer column Hermite normal form.

Just enough linear algebra for 4x4 systems: exact products, inverses,
determinants, and the column-style HNF used to present integer lattices
(column operations only, non-negative diagonal, entries left of each
pivot reduced into [0, pivot)).
"""

from fractions import Fraction


class RationalMatrix:
    """Immutable exact matrix over Fraction."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        n, m = self.shape
        return RationalMatrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def __mul__(self, other):
        n, m = self.shape
        if isinstance(other, RationalMatrix):
            m2, p = other.shape
            if m != m2:
                raise ValueError("shape mismatch in matrix product")
            return RationalMatrix(
                [[sum(self.rows[i][t] * other.rows[t][j] for t in range(m)) for j in range(p)]
                 for i in range(n)]
            )
        return NotImplemented

    def apply(self, vector):
        """Matrix times column vector (any ring-valued entries)."""
        n, m = self.shape
        if len(vector) != m:
            raise ValueError("vector length mismatch")
        out = []
        for i in range(n):
            acc = 0
            for j in range(m):
                c = self.rows[i][j]
                if c != 0:
                    acc = acc + c * vector[j]
            out.append(acc if not isinstance(acc, int) else Fraction(acc))
        return tuple(out)

    def determinant(self):
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        M = [list(r) for r in self.rows]
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if M[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                M[col], M[piv] = M[piv], M[col]
                det = -det
            det *= M[col][col]
            inv = Fraction(1) / M[col][col]
            for r in range(col + 1, n):
                if M[r][col] != 0:
                    f = M[r][col] * inv
                    M[r] = [M[r][j] - f * M[col][j] for j in range(n)]
        return det

    def inverse(self):
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        M = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if M[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            M[col], M[piv] = M[piv], M[col]
            inv = Fraction(1) / M[col][col]
            M[col] = [x * inv for x in M[col]]
            for r in range(n):
                if r != col and M[r][col] != 0:
                    f = M[r][col]
                    M[r] = [M[r][j] - f * M[col][j] for j in range(2 * n)]
        return RationalMatrix([row[n:] for row in M])

    def solve(self, rhs):
        """Exact solution of self * x = rhs (square, nonsingular)."""
        return self.inverse().apply(rhs)

    def is_integral(self):
        return all(x.denominator == 1 for row in self.rows for x in row)

    def to_int_rows(self):
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[int(x) for x in row] for row in self.rows]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self):
        return "RationalMatrix(%r)" % (
            [[str(x) for x in row] for row in self.rows],
        )


def column_hnf(int_rows):
    """Column-style Hermite normal form of an integer matrix.

    Column operations only; the result is lower triangular with positive
    pivots and, in each pivot row, entries to the left of the pivot reduced
    into [0, pivot).  Requires full column rank (pivot in every row for
    square nonsingular input).
    """
    A = [list(map(int, row)) for row in int_rows]
    if not A:
        return []
    n, m = len(A), len(A[0])

    def col_combine(j1, j2, a, b, c, d):
        # (col j1, col j2) <- (a*col j1 + b*col j2, c*col j1 + d*col j2)
        for i in range(n):
            x, y = A[i][j1], A[i][j2]
            A[i][j1] = a * x + b * y
            A[i][j2] = c * x + d * y

    pivot_col = 0
    for i in range(n):
        if pivot_col >= m:
            break
        piv = next((j for j in range(pivot_col, m) if A[i][j] != 0), None)
        if piv is None:
            continue
        if piv != pivot_col:
            for r in range(n):
                A[r][pivot_col], A[r][piv] = A[r][piv], A[r][pivot_col]
        for j in range(pivot_col + 1, m):
            if A[i][j] == 0:
                continue
            a, b = A[i][pivot_col], A[i][j]
            g, x, y = _xgcd(a, b)
            col_combine(pivot_col, j, x, y, -(b // g), a // g)
        if A[i][pivot_col] < 0:
            for r in range(n):
                A[r][pivot_col] = -A[r][pivot_col]
        p = A[i][pivot_col]
        for j in range(pivot_col):
            q = A[i][j] // p
            if q:
                for r in range(n):
                    A[r][j] -= q * A[r][pivot_col]
        pivot_col += 1
    return A


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def solve_integer(int_rows, rhs):
    """Integer solution x of A x = rhs, or None when none exists (A nonsingular)."""
    A = RationalMatrix(int_rows)
    x = A.solve([Fraction(v) for v in rhs])
    if all(v.denominator == 1 for v in x):
        return tuple(int(v) for v in x)
    return None
