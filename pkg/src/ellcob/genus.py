"""Multiplicative-sequence genera from characteristic power series.

The pipeline: an even characteristic series Q(z) with Q(0) = 1 determines,
for each k, a polynomial in the Pontryagin classes p_1..p_k whose pairing
with the Pontryagin numbers of a 4k-manifold is the genus value.  Writing
log Q(z) = sum_j b_j z^(2j), the product of Q over formal roots equals
exp(sum_j b_j ps_j) where ps_j is the j-th power sum in the squared roots;
Newton's identities convert power sums to the elementary basis e_j = p_j.

The universal elliptic genus lives over the ring Q[delta, eps]: its
logarithm g integrates (1 - 2*delta*t^2 + eps*t^4)^(-1/2) and the inverse
series f = g^(-1) satisfies (f')^2 = 1 - 2*delta*f^2 + eps*f^4.

`genus_polynomial_by_root_expansion` recomputes a genus polynomial by
brute-force expansion in formal roots; it exists purely as an independent
oracle for tests and the verification suite.
"""

from fractions import Fraction
from functools import lru_cache

from .series import DeltaEpsPoly, ZSeries, DELTA, EPS
from .partitions import partitions_of, format_partition
from .sympoly import (
    PartitionPolynomial,
    exp_positive_weight,
    powersum_poly_to_elementary,
)


class GenusPolynomial:
    """Weight-k polynomial over partitions: coefficients of p-monomials."""

    __slots__ = ("k", "coefficients")

    def __init__(self, k, coefficients):
        parts = partitions_of(k)
        coeffs = {}
        for p in parts:
            coeffs[p] = coefficients.get(p, Fraction(0))
        extra = set(coefficients) - set(parts)
        if extra:
            raise ValueError("coefficients for non-partitions of %d: %s" % (k, sorted(extra)))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GenusPolynomial is immutable")

    def evaluate(self, vector):
        """Pair with a PontryaginVector of matching k."""
        if vector.k != self.k:
            raise ValueError(
                "dimension mismatch: genus polynomial k=%d, vector k=%d" % (self.k, vector.k)
            )
        parts = partitions_of(self.k)
        total = self.coefficients[parts[0]] * 0  # zero of the coefficient ring
        for p in parts:
            c = self.coefficients[p]
            n = vector.numbers[p]
            if n:
                total = total + c * n
        return total

    def specialize(self, delta_value, eps_value):
        """Substitute values (rationals or q-series) for delta and eps."""
        out = {}
        for p, c in self.coefficients.items():
            if isinstance(c, DeltaEpsPoly):
                out[p] = c.substitute(delta_value, eps_value)
            else:
                out[p] = c
        return GenusPolynomial(self.k, out)

    def map_coefficients(self, fn):
        return GenusPolynomial(self.k, {p: fn(c) for p, c in self.coefficients.items()})

    def to_terms(self):
        """Serialization: [(partition string, coefficient), ...] in canonical order."""
        out = []
        for p in partitions_of(self.k):
            c = self.coefficients[p]
            out.append((format_partition(p), c))
        return out

    def __eq__(self, other):
        if not isinstance(other, GenusPolynomial):
            return NotImplemented
        return self.k == other.k and all(
            self.coefficients[p] == other.coefficients[p] for p in partitions_of(self.k)
        )

    def __repr__(self):
        inner = ", ".join("%s: %s" % (format_partition(p), c) for p, c in self.coefficients.items())
        return "GenusPolynomial(k=%d, {%s})" % (self.k, inner)


def elliptic_log(order):
    """The odd logarithm series g(z) over Q[delta, eps], valid below z^order.

    g = integral of (1 - 2*delta*t^2 + eps*t^4)^(-1/2); g = z + delta*z^3/3 + ...
    """
    quartic = ZSeries([1, 0, -2 * DELTA, 0, EPS], order, parity="even")
    g = quartic.inv_sqrt().integrate()
    return g.truncate(order).with_parity("odd")


@lru_cache(maxsize=None)
def universal_f(order):
    """Formal inverse f of the elliptic logarithm; (f')^2 = 1 - 2*delta*f^2 + eps*f^4."""
    return elliptic_log(order).reversion()


def char_series_from_f(f):
    """Characteristic series Q = z/f for an odd f = z + O(z^3)."""
    return f.shift_down(1).invert()


def _log_coefficients(Q, k):
    """The b_j with log Q = sum b_j z^(2j), for j = 1..k."""
    if Q.order < 2 * k + 1:
        raise ValueError("need Q valid through z^%d (order >= %d), got order %d"
                         % (2 * k, 2 * k + 1, Q.order))
    if not (Q.coeffs[0] == 1):
        raise ValueError("characteristic series must have constant term 1")
    for i in range(1, min(Q.order, 2 * k + 1), 2):
        if not (Q.coeffs[i] == 0):
            raise ValueError("characteristic series must be even")
    L = Q.log()
    return [L.coeffs[2 * j] for j in range(1, k + 1)]


def genus_polynomial(Q, k):
    """Weight-k multiplicative-sequence polynomial of the characteristic series Q.

    Uses the power-sum exponential plus Newton's identities; the formal-root
    expansion below is the independent check of the same computation.
    """
    if k < 1:
        raise ValueError("genus_polynomial needs k >= 1")
    bs = _log_coefficients(Q, k)
    total = PartitionPolynomial.zero(k)
    for j, b in enumerate(bs, start=1):
        total = total + PartitionPolynomial.generator(j, k) * b
    ps_poly = exp_positive_weight(total)
    e_poly = powersum_poly_to_elementary(ps_poly).weight_part(k)
    return GenusPolynomial(k, dict(e_poly.terms))


def evaluate_genus(P, vector):
    return P.evaluate(vector)


def specialize(P, delta_value, eps_value):
    return P.specialize(delta_value, eps_value)


@lru_cache(maxsize=None)
def universal_elliptic_genus(k):
    """The weight-k universal elliptic genus polynomial over Q[delta, eps]."""
    f = universal_f(2 * k + 2)
    return genus_polynomial(char_series_from_f(f), k)


# ---------------------------------------------------------------------------
# Independent oracle: brute-force expansion in k formal roots.

def _poly_mul(A, B, k):
    """Multiply dicts {exponent tuple: coeff} over k variables, degree <= k."""
    out = {}
    for ea, ca in A.items():
        da = sum(ea)
        for eb, cb in B.items():
            if da + sum(eb) > k:
                continue
            key = tuple(ea[i] + eb[i] for i in range(k))
            prod = ca * cb
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return out


def _elementary_poly(j, k):
    """e_j in k variables as an exponent dict."""
    from itertools import combinations

    out = {}
    for subset in combinations(range(k), j):
        e = [0] * k
        for i in subset:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


def _solve_linear(A, rhs):
    """Solve A x = rhs with exact Gaussian elimination; A rational, rhs ring-valued."""
    n = len(A)
    M = [row[:] for row in A]
    b = list(rhs)
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        b[col], b[piv] = b[piv], b[col]
        inv = Fraction(1) / M[col][col]
        M[col] = [x * inv for x in M[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and M[r][col] != 0:
                factor = M[r][col]
                M[r] = [M[r][i] - factor * M[col][i] for i in range(n)]
                b[r] = b[r] - factor * b[col]
    return b


def genus_polynomial_by_root_expansion(Q, k):
    """Oracle path: expand prod_i Q(z_i) in k formal roots and solve for the e-basis.

    Expands the product literally as a symmetric polynomial in w_i = z_i^2,
    then matches monomial coefficients against products of elementary
    symmetric polynomials by an exact linear solve.  Exponentially slower
    than the Newton path; intended for k <= 3.
    """
    if Q.order < 2 * k + 1:
        raise ValueError("need Q valid through z^%d" % (2 * k))
    qc = [Q.coeffs[2 * m] for m in range(k + 1)]  # Q in w = z^2
    prod = {(0,) * k: Fraction(1)}
    for i in range(k):
        factor = {}
        for m, c in enumerate(qc):
            e = [0] * k
            e[i] = m
            factor[tuple(e)] = c
        prod = _poly_mul(prod, factor, k)

    parts = partitions_of(k)
    monomials = [tuple(list(p) + [0] * (k - len(p))) for p in parts]

    e_polys = {}
    for p in parts:
        acc = {(0,) * k: Fraction(1)}
        for j in p:
            acc = _poly_mul(acc, _elementary_poly(j, k), k)
        e_polys[p] = acc

    A = [[e_polys[p].get(mono, Fraction(0)) for p in parts] for mono in monomials]
    rhs = [prod.get(mono, Fraction(0)) for mono in monomials]
    x = _solve_linear(A, rhs)
    return GenusPolynomial(k, {p: x[i] for i, p in enumerate(parts)})
