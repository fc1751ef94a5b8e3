"""Truncated formal power series and exact polynomial scalars.

Every scalar in this package is an exact rational (``fractions.Fraction``):
always reduced, positive denominator, no rounding anywhere.  Series are
dense coefficient tuples with an explicit truncation ``order``: the
coefficient of exponent n is valid exactly when n < order, arithmetic
propagates the tightest provable order (min rule, sharpened by valuations
for products and composition), and equality compares only the common
valid range.

Two series flavours share one implementation:

* ``QSeries`` -- expansions in nu = q^(1/2); index n holds the coefficient
  of q^(n/2), so integer-power series simply carry zero odd entries.
* ``ZSeries`` -- expansions in the genus variable z, with an optional
  parity hint ('even'/'odd') that is validated at construction.

Coefficients default to Fractions but may be any commutative-ring value
that mixes with Fraction scalars (DeltaEpsPoly, QSeries, CharClass, ...);
two-variable objects are represented as ZSeries over QSeries.

All values are immutable after construction and every operation is a pure
function, so values can be shared freely between threads.
"""

from fractions import Fraction

Rational = Fraction


def rational_from_str(s):
    """Parse "num/den" (or plain "num") into a Fraction."""
    return Fraction(s.strip())


def rational_to_str(r):
    """Serialize a Fraction as "num/den", or "num" when the denominator is 1."""
    r = Fraction(r)
    return str(r)


def _coerce(c):
    """Accept an exact coefficient; ints become Fractions, floats are refused."""
    if isinstance(c, bool) or isinstance(c, int):
        return Fraction(c)
    if isinstance(c, float) or isinstance(c, complex):
        raise TypeError("inexact coefficient %r; this library is exact-only" % (c,))
    return c


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _is_exact_zero(c):
    """True only for coefficients known to be exactly zero (no truncation doubt)."""
    if isinstance(c, Fraction):
        return c == 0
    if isinstance(c, DeltaEpsPoly):
        return not c.terms
    return False


def _one_over(c):
    try:
        return 1 / c
    except ZeroDivisionError:
        raise ValueError("not invertible: constant term is zero") from None


def _mul_raw(A, B, n):
    """First n coefficients of the product of coefficient lists A and B.

    Dropping terms with an index beyond len(A)/len(B) is sound exactly when
    n respects the valuation-sharpened order rule; callers guarantee that.
    """
    out = [_ZERO] * n
    for i, a in enumerate(A):
        if i >= n:
            break
        if _is_exact_zero(a):
            continue
        top = min(len(B), n - i)
        for j in range(top):
            b = B[j]
            if _is_exact_zero(b):
                continue
            out[i + j] = out[i + j] + a * b
    return out


def _invert_raw(A, n):
    b0 = _one_over(A[0])
    out = [b0] + [_ZERO] * (n - 1)
    for k in range(1, n):
        acc = _ZERO
        for i in range(1, min(k, len(A) - 1) + 1):
            if not _is_exact_zero(A[i]):
                acc = acc + A[i] * out[k - i]
        out[k] = -(b0 * acc)
    return out


class _Series:
    """Shared dense-series arithmetic; not instantiated directly."""

    __slots__ = ("coeffs", "order")
    _scalar_types = ()  # extra types treated as coefficient scalars, per subclass

    def __init__(self, coeffs, order=None):
        coeffs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) < order:
            coeffs = coeffs + [_ZERO] * (order - len(coeffs))
        elif len(coeffs) > order:
            coeffs = coeffs[:order]
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("series are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([_ONE], order)

    @classmethod
    def monomial(cls, coeff, exponent, order):
        if exponent >= order:
            raise ValueError("monomial exponent %d outside order %d" % (exponent, order))
        coeffs = [_ZERO] * exponent + [_coerce(coeff)]
        return cls(coeffs, order)

    # -- inspection ------------------------------------------------------

    def valuation(self):
        """Index of the first coefficient not known to be zero (order if none)."""
        for i, c in enumerate(self.coeffs):
            if not _is_exact_zero(c):
                return i
        return self.order

    def is_zero(self):
        """True when every valid coefficient compares equal to zero."""
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, n):
        if n >= self.order:
            raise ValueError("coefficient %d beyond truncation order %d" % (n, self.order))
        return self.coeffs[n]

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series (order %d > %d)" % (order, self.order))
        return self._wrap(self.coeffs[:order], order)

    def _wrap(self, coeffs, order):
        return type(self)(coeffs, order)

    # -- ring operations ---------------------------------------------------

    def _is_scalar(self, other):
        return isinstance(other, (int, Fraction) + self._scalar_types)

    def __add__(self, other):
        if isinstance(other, type(self)):
            n = min(self.order, other.order)
            return self._wrap([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)
        if isinstance(other, _Series) and not self._is_scalar(other):
            return NotImplemented
        if self.order == 0:
            raise ValueError("cannot add a constant to a series with no valid coefficients")
        other = _coerce(other)
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return self._wrap(coeffs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, type(self)):
            n = min(self.order + other.valuation(), other.order + self.valuation())
            return self._wrap(_mul_raw(self.coeffs, other.coeffs, n), n)
        if isinstance(other, _Series) and not self._is_scalar(other):
            return NotImplemented
        other = _coerce(other)
        return self._wrap([c * other for c in self.coeffs], self.order)

    def __rmul__(self, other):
        if isinstance(other, _Series) and not self._is_scalar(other):
            return NotImplemented
        other = _coerce(other)
        return self._wrap([other * c for c in self.coeffs], self.order)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers must be non-negative integers")
        result = self.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __truediv__(self, other):
        if isinstance(other, type(self)):
            return self * other.invert()
        if isinstance(other, _Series) and not self._is_scalar(other):
            return NotImplemented
        return self * _one_over(_coerce(other))

    def __rtruediv__(self, other):
        # scalar / series
        if isinstance(other, _Series):
            return NotImplemented
        return self.invert() * _coerce(other)

    def __eq__(self, other):
        if isinstance(other, type(self)):
            n = min(self.order, other.order)
            return all(self.coeffs[i] == other.coeffs[i] for i in range(n))
        if isinstance(other, _Series):
            return NotImplemented
        other = _coerce(other)
        if self.order == 0:
            return True
        if self.coeffs[0] != other:
            return False
        return all(c == 0 for c in self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    # -- series-level operations -----------------------------------------

    def invert(self):
        """Multiplicative inverse; requires a unit constant term."""
        if self.order == 0:
            raise ValueError("cannot invert a series with no valid coefficients")
        return self._wrap(_invert_raw(self.coeffs, self.order), self.order)

    def inv_sqrt(self):
        """r with r*r*self == 1 and r(0) == 1; requires constant term exactly 1."""
        if self.order == 0 or self.coeffs[0] != 1:
            raise ValueError("inv_sqrt requires constant term 1")
        n = self.order
        s = _invert_raw(self.coeffs, n)
        r = [_ONE] + [_ZERO] * (n - 1)
        half = Fraction(1, 2)
        for k in range(1, n):
            acc = s[k]
            for i in range(1, k):
                acc = acc - r[i] * r[k - i]
            r[k] = acc * half
        return self._wrap(r, n)

    def exp(self):
        """Exponential of a series with zero constant term."""
        if self.order == 0:
            raise ValueError("cannot exponentiate a series with no valid coefficients")
        if not (self.coeffs[0] == 0):
            raise ValueError("exp requires zero constant term")
        n = self.order
        L = self.coeffs
        out = [_ONE] + [_ZERO] * (n - 1)
        for k in range(1, n):
            acc = _ZERO
            for i in range(1, k + 1):
                if not _is_exact_zero(L[i]):
                    acc = acc + (L[i] * out[k - i]) * i
            out[k] = acc * Fraction(1, k)
        return self._wrap(out, n)

    def log(self):
        """Logarithm of a series with constant term exactly 1."""
        if self.order == 0 or self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        s = self.coeffs
        out = [_ZERO] * n
        for k in range(1, n):
            acc = s[k] * k
            for i in range(1, k):
                if not _is_exact_zero(out[i]):
                    acc = acc - (out[i] * s[k - i]) * i
            out[k] = acc * Fraction(1, k)
        return self._wrap(out, n)

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 6 else ""
        return "%s([%s%s], order=%d)" % (type(self).__name__, head, tail, self.order)


def _format_q_exponent(n):
    """Exponent of q for nu-index n: q, q^2, or q^(m/2)."""
    if n % 2 == 0:
        e = n // 2
        return "q" if e == 1 else "q^%d" % e
    return "q^(%d/2)" % n


class QSeries(_Series):
    """Truncated series in nu = q^(1/2); index n is the coefficient of q^(n/2)."""

    __slots__ = ()

    @classmethod
    def from_terms(cls, terms, order):
        """Build from sparse [exponent, coefficient] pairs (nu-units exponents)."""
        coeffs = [_ZERO] * order
        for e, c in terms:
            if not 0 <= e < order:
                raise ValueError("term exponent %d outside order %d" % (e, order))
            if isinstance(c, str):
                c = rational_from_str(c)
            coeffs[e] = _coerce(c)
        return cls(coeffs, order)

    def to_terms(self):
        """Sparse [exponent, "num/den"] pairs of the nonzero valid coefficients."""
        return [[i, rational_to_str(c)] for i, c in enumerate(self.coeffs) if c != 0]

    def shift_up(self, k):
        """Multiply by nu^k (exact; extends the valid range by k)."""
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return QSeries((_ZERO,) * k + self.coeffs, self.order + k)

    def coefficient_q(self, e):
        """Coefficient of q^e for integer e (nu-index 2e)."""
        return self.coefficient(2 * e)

    def pretty(self):
        """Human-readable form: "1/4 + 6*q + 6*q^2 + O(q^3)"; half powers as q^(1/2)."""
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if not isinstance(c, Fraction):
                raise TypeError("pretty() needs rational coefficients")
            mag = -c if c < 0 else c
            if n == 0:
                body = str(mag)
            elif mag == 1:
                body = _format_q_exponent(n)
            else:
                body = "%s*%s" % (mag, _format_q_exponent(n))
            parts.append(("-" if c < 0 else "+", body))
        if self.order % 2 == 0:
            o = "O(%s)" % (_format_q_exponent(self.order) if self.order != 2 else "q")
        else:
            o = "O(%s)" % _format_q_exponent(self.order)
        if not parts:
            return "0 + " + o
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text + " + " + o


_PARITIES = (None, "even", "odd")


def _check_parity(coeffs, parity):
    if parity is None:
        return
    bad = 1 if parity == "even" else 0
    for i in range(bad, len(coeffs), 2):
        if not (coeffs[i] == 0):
            raise ValueError("coefficient of exponent %d violates %s parity" % (i, parity))


def _mul_parity(p, q):
    if p is None or q is None:
        return None
    return "even" if p == q else "odd"


class ZSeries(_Series):
    """Truncated series in the genus variable z, with an optional parity hint."""

    __slots__ = ("parity",)
    _scalar_types = (QSeries,)

    def __init__(self, coeffs, order=None, parity=None):
        super().__init__(coeffs, order)
        if parity not in _PARITIES:
            raise ValueError("parity must be None, 'even' or 'odd'")
        _check_parity(self.coeffs, parity)
        object.__setattr__(self, "parity", parity)

    @classmethod
    def var(cls, order):
        """The series z itself."""
        return cls.monomial(_ONE, 1, order).with_parity("odd")

    def _wrap(self, coeffs, order):
        return ZSeries(coeffs, order)

    def with_parity(self, parity):
        return ZSeries(self.coeffs, self.order, parity)

    def truncate(self, order):
        return super().truncate(order).with_parity(self.parity)

    def __add__(self, other):
        r = super().__add__(other)
        if r is NotImplemented:
            return r
        if isinstance(other, ZSeries) and other.parity == self.parity:
            return r.with_parity(self.parity)
        if not isinstance(other, ZSeries) and self.parity == "even":
            return r.with_parity("even")
        return r

    __radd__ = __add__

    def __neg__(self):
        return super().__neg__().with_parity(self.parity)

    def __mul__(self, other):
        r = super().__mul__(other)
        if r is NotImplemented:
            return r
        if isinstance(other, ZSeries):
            return r.with_parity(_mul_parity(self.parity, other.parity))
        return r.with_parity(self.parity)

    def __rmul__(self, other):
        r = super().__rmul__(other)
        if r is NotImplemented:
            return r
        return r.with_parity(self.parity)

    def invert(self):
        return super().invert().with_parity(self.parity if self.parity == "even" else None)

    def inv_sqrt(self):
        return super().inv_sqrt().with_parity(self.parity if self.parity == "even" else None)

    def shift_down(self, k):
        """Divide by z^k; the first k coefficients must be exactly zero."""
        for i in range(min(k, self.order)):
            if not (self.coeffs[i] == 0):
                raise ValueError("cannot divide by z^%d: coefficient %d is nonzero" % (k, i))
        if k > self.order:
            raise ValueError("shift_down beyond the valid range")
        return ZSeries(self.coeffs[k:], self.order - k)

    def shift_up(self, k):
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return ZSeries((_ZERO,) * k + self.coeffs, self.order + k)

    def derivative(self):
        n = max(self.order - 1, 0)
        coeffs = [self.coeffs[i + 1] * (i + 1) for i in range(n)]
        flipped = {"even": "odd", "odd": "even"}.get(self.parity)
        return ZSeries(coeffs, n, flipped)

    def integrate(self):
        """Formal antiderivative with zero constant term; extends the order by 1."""
        coeffs = [_ZERO] + [self.coeffs[i] * Fraction(1, i + 1) for i in range(self.order)]
        flipped = {"even": "odd", "odd": "even"}.get(self.parity)
        return ZSeries(coeffs, self.order + 1, flipped)

    def compose(self, g):
        """self(g) for a ZSeries g with g(0) == 0."""
        if not isinstance(g, ZSeries):
            raise TypeError("compose expects a ZSeries argument")
        if g.order == 0 or not (g.coeffs[0] == 0):
            raise ValueError("compose requires g(0) = 0")
        v = max(g.valuation(), 1)
        n = min(g.order, self.order * v)
        acc = [_ZERO] * n
        for c in reversed(self.coeffs):
            acc = _mul_raw(acc, g.coeffs, n)
            acc[0] = acc[0] + c
        if g.parity == "odd":
            parity = self.parity
        elif g.parity == "even":
            parity = "even"
        else:
            parity = None
        return ZSeries(acc, n, parity)

    def reversion(self):
        """Compositional inverse g with self(g(z)) == z, via Lagrange inversion.

        Requires self(0) == 0 and linear coefficient exactly 1.
        """
        if self.order < 2 or not (self.coeffs[0] == 0) or self.coeffs[1] != 1:
            raise ValueError("reversion requires f = z + O(z^2) with linear coefficient 1")
        m = self.order
        h = self.shift_down(1).invert()  # (z/f), constant term 1
        g = [_ZERO, _ONE] + [_ZERO] * (m - 2)
        power = list(h.coeffs)  # h^n computed incrementally, valid to order m-1
        for n in range(2, m):
            power = _mul_raw(power, h.coeffs, m - 1)
            g[n] = power[n - 1] * Fraction(1, n)
        parity = "odd" if self.parity == "odd" else None
        return ZSeries(g, m, parity)


class DeltaEpsPoly:
    """Exact polynomial in the genus parameters delta and eps.

    Terms map (a, b) -> Fraction for the monomial delta^a * eps^b, zero terms
    pruned.  The grading is weight(delta) = 1, weight(eps) = 2, so the genus
    of a 4k-manifold is homogeneous of weight k.  Immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            c = _coerce(c)
            if not isinstance(c, Fraction):
                raise TypeError("DeltaEpsPoly coefficients must be rational")
            if a < 0 or b < 0:
                raise ValueError("negative exponents are not allowed")
            if c != 0:
                clean[(int(a), int(b))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DeltaEpsPoly is immutable")

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def delta(cls):
        return cls({(1, 0): 1})

    @classmethod
    def eps(cls):
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls):
        return cls({})

    def is_zero(self):
        return not self.terms

    def coefficient(self, a, b):
        return self.terms.get((a, b), _ZERO)

    def weights(self):
        return sorted({a + 2 * b for (a, b) in self.terms})

    def is_homogeneous(self, weight=None):
        ws = self.weights()
        if not ws:
            return True
        if len(ws) > 1:
            return False
        return weight is None or ws[0] == weight

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DeltaEpsPoly.constant(other)
        elif not isinstance(other, DeltaEpsPoly):
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, _ZERO) + c
        return DeltaEpsPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return DeltaEpsPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            return DeltaEpsPoly({k: v * c for k, v in self.terms.items()})
        if not isinstance(other, DeltaEpsPoly):
            return NotImplemented
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                terms[k] = terms.get(k, _ZERO) + c1 * c2
        return DeltaEpsPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be non-negative integers")
        out = DeltaEpsPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _coerce(other))
        return NotImplemented

    def __rtruediv__(self, other):
        # scalar / constant polynomial
        ws = self.weights()
        if ws and ws != [0]:
            raise ValueError("not invertible: non-constant delta/eps polynomial")
        c = self.coefficient(0, 0)
        if c == 0:
            raise ZeroDivisionError("division by the zero polynomial")
        return DeltaEpsPoly.constant(_coerce(other) / c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DeltaEpsPoly.constant(other)
        elif not isinstance(other, DeltaEpsPoly):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def substitute(self, delta_value, eps_value):
        """Evaluate at delta = delta_value, eps = eps_value.

        Values may be Fractions or QSeries; powers are computed exactly, and
        b == 0 / a == 0 factors are skipped (so eps = 0 is safe).
        """
        dpow = {0: _ONE}
        epow = {0: _ONE}
        out = _ZERO
        for (a, b), c in sorted(self.terms.items()):
            if a not in dpow:
                dpow[a] = delta_value ** a
            if b not in epow:
                epow[b] = eps_value ** b
            out = out + c * dpow[a] * epow[b]
        return out

    def to_terms(self):
        """Sparse [[a, b, "num/den"], ...] sorted by weight then delta-degree."""
        keys = sorted(self.terms, key=lambda ab: (ab[0] + 2 * ab[1], -ab[0]))
        return [[a, b, rational_to_str(self.terms[(a, b)])] for a, b in keys]

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda ab: (ab[0] + 2 * ab[1], -ab[0]))
        parts = []
        for a, b in keys:
            c = self.terms[(a, b)]
            mag = -c if c < 0 else c
            names = []
            if a:
                names.append("delta" if a == 1 else "delta^%d" % a)
            if b:
                names.append("eps" if b == 1 else "eps^%d" % b)
            if not names:
                body = str(mag)
            elif mag == 1:
                body = "*".join(names)
            else:
                body = "*".join([str(mag)] + names)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "DeltaEpsPoly(%s)" % (self,)


DELTA = DeltaEpsPoly.delta()
EPS = DeltaEpsPoly.eps()
