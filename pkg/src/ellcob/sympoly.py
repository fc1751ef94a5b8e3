"""Polynomials in graded symmetric-function generators.

A PartitionPolynomial is a formal polynomial in commuting generators
x_1, x_2, ... where x_j carries weight j; a monomial is stored as the
decreasing tuple of its generator indices and everything above a weight
cap is truncated away.  The same container serves two bases:

* power sums ps_j of the squared Chern roots (CharClass components), and
* elementary symmetric functions e_j = p_j (Pontryagin-class monomials).

`powersum_monomial_to_elementary` is the Newton-identities change of
basis used to turn characteristic-class data into genus polynomials.
"""

from fractions import Fraction
from functools import lru_cache


class PartitionPolynomial:
    """Weight-truncated polynomial over partition-indexed monomials."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms, cap):
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if sum(mono) > cap:
                continue
            if any(mono[i] < mono[i + 1] for i in range(len(mono) - 1)):
                mono = tuple(sorted(mono, reverse=True))
            if isinstance(c, int):
                c = Fraction(c)
            if _nonzero(c):
                clean[mono] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "cap", cap)

    def __setattr__(self, name, value):
        raise AttributeError("PartitionPolynomial is immutable")

    @classmethod
    def zero(cls, cap):
        return cls({}, cap)

    @classmethod
    def constant(cls, c, cap):
        return cls({(): c}, cap)

    @classmethod
    def generator(cls, j, cap):
        return cls({(j,): Fraction(1)}, cap)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PartitionPolynomial.constant(other, self.cap)
        elif not isinstance(other, PartitionPolynomial):
            return NotImplemented
        cap = min(self.cap, other.cap)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return PartitionPolynomial(terms, cap)

    __radd__ = __add__

    def __neg__(self):
        return PartitionPolynomial({m: -c for m, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PartitionPolynomial):
            cap = min(self.cap, other.cap)
            terms = {}
            for m1, c1 in self.terms.items():
                w1 = sum(m1)
                for m2, c2 in other.terms.items():
                    if w1 + sum(m2) > cap:
                        continue
                    mono = tuple(sorted(m1 + m2, reverse=True))
                    prod = c1 * c2
                    if mono in terms:
                        terms[mono] = terms[mono] + prod
                    else:
                        terms[mono] = prod
            return PartitionPolynomial(terms, cap)
        return PartitionPolynomial({m: c * other for m, c in self.terms.items()}, self.cap)

    def __rmul__(self, other):
        return PartitionPolynomial({m: other * c for m, c in self.terms.items()}, self.cap)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PartitionPolynomial.constant(other, self.cap)
        elif not isinstance(other, PartitionPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def weight_part(self, w):
        return PartitionPolynomial(
            {m: c for m, c in self.terms.items() if sum(m) == w}, self.cap
        )

    def map_coefficients(self, fn):
        return PartitionPolynomial({m: fn(c) for m, c in self.terms.items()}, self.cap)

    def scale_monomials(self, factor_of_weight):
        """Multiply each monomial by a scalar depending on its weight."""
        return PartitionPolynomial(
            {m: c * factor_of_weight(sum(m)) for m, c in self.terms.items()}, self.cap
        )

    def __repr__(self):
        items = sorted(self.terms.items())
        return "PartitionPolynomial(%s, cap=%d)" % (dict(items), self.cap)


def _nonzero(c):
    try:
        return c != 0
    except TypeError:
        return True


def exp_positive_weight(poly):
    """exp of a PartitionPolynomial with no constant term, truncated at its cap."""
    if () in poly.terms:
        raise ValueError("exp needs a polynomial with zero constant term")
    out = PartitionPolynomial.constant(Fraction(1), poly.cap)
    term = PartitionPolynomial.constant(Fraction(1), poly.cap)
    for m in range(1, poly.cap + 1):
        term = term * poly * Fraction(1, m)
        if not term.terms:
            break
        out = out + term
    return out


@lru_cache(maxsize=None)
def powersum_to_elementary(j):
    """ps_j expressed in the elementary generators e_1..e_j (Newton's identities)."""
    if j < 1:
        raise ValueError("power sums are indexed from 1")
    out = PartitionPolynomial({(j,): Fraction((-1) ** (j - 1) * j)}, j)
    for i in range(1, j):
        e_i = PartitionPolynomial.generator(i, j)
        ps = PartitionPolynomial(powersum_to_elementary(j - i).terms, j)
        out = out + Fraction((-1) ** (i - 1)) * (e_i * ps)
    return out


@lru_cache(maxsize=None)
def _powersum_monomial_cached(mono, cap):
    out = PartitionPolynomial.constant(Fraction(1), cap)
    for j in mono:
        converted = PartitionPolynomial(powersum_to_elementary(j).terms, cap)
        out = out * converted
    return out


def powersum_monomial_to_elementary(mono, cap):
    """The e-basis expansion of the power-sum monomial ps_{j1} * ps_{j2} * ..."""
    return _powersum_monomial_cached(tuple(mono), cap)


def powersum_poly_to_elementary(poly):
    """Rewrite a ps-basis PartitionPolynomial in the e-basis (same cap)."""
    out = PartitionPolynomial.zero(poly.cap)
    for mono, c in poly.terms.items():
        out = out + powersum_monomial_to_elementary(mono, poly.cap) * c
    return out
