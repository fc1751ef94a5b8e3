"""Chern characters of tangent-derived bundles and twisted genera.

A CharClass is a characteristic-class expression for a 4k-manifold written
as a polynomial in the power sums ps_j of the squared formal Chern roots,
truncated above total weight k (degree 4k).  The complexified tangent
bundle has ch = 4k + sum_j (2/(2j)!) ps_j; Adams operations act by
ps_j -> m^(2j) ps_j, and total symmetric/exterior powers are produced from
their Adams-operation logarithms:

    log ch S_t(E)      = sum_{m>=1} t^m ch(psi^m E)/m
    log ch Lambda_t(E) = sum_{m>=1} (-1)^(m+1) t^m ch(psi^m E)/m

The Witten bundle characters substitute t -> q^n (kind 1) and
t -> -q^(m-1/2) (kind 2) on the reduced tangent bundle, giving q-series
with CharClass coefficients.  Pairing A-hat or L-hat classes times such a
character against Pontryagin numbers yields the twisted-index q-expansions.

Pure functions over immutable values throughout.
"""

from fractions import Fraction
from functools import lru_cache
import math

from .series import QSeries, ZSeries
from .partitions import partitions_of
from .sympoly import (
    PartitionPolynomial,
    exp_positive_weight,
    powersum_poly_to_elementary,
)
from .genus import GenusPolynomial
from .modular import sinh_half, cosh_half


class CharClass:
    """Power-sum polynomial form of a characteristic class on a 4k-manifold."""

    __slots__ = ("k", "poly")

    def __init__(self, k, poly):
        if poly.cap != k:
            poly = PartitionPolynomial(poly.terms, k)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "poly", poly)

    def __setattr__(self, name, value):
        raise AttributeError("CharClass is immutable")

    @classmethod
    def zero(cls, k):
        return cls(k, PartitionPolynomial.zero(k))

    @classmethod
    def constant(cls, c, k):
        return cls(k, PartitionPolynomial.constant(Fraction(c), k))

    def degree_zero_part(self):
        return self.poly.coefficient(())

    def _check(self, other):
        if self.k != other.k:
            raise ValueError("CharClass dimension mismatch: k=%d vs k=%d" % (self.k, other.k))

    def __add__(self, other):
        if isinstance(other, CharClass):
            self._check(other)
            return CharClass(self.k, self.poly + other.poly)
        if isinstance(other, (int, Fraction)):
            return CharClass(self.k, self.poly + Fraction(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CharClass(self.k, -self.poly)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CharClass):
            self._check(other)
            return CharClass(self.k, self.poly * other.poly)
        if isinstance(other, (int, Fraction)):
            return CharClass(self.k, self.poly * Fraction(other))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CharClass):
            return self.k == other.k and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == Fraction(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.poly)

    def weight_part(self, w):
        return CharClass(self.k, self.poly.weight_part(w))

    def __repr__(self):
        return "CharClass(k=%d, %r)" % (self.k, self.poly)


def ch_tangent(k):
    """ch of the complexified tangent bundle: 4k + sum_j (2/(2j)!) ps_j."""
    terms = {(): Fraction(4 * k)}
    for j in range(1, k + 1):
        terms[(j,)] = Fraction(2, math.factorial(2 * j))
    return CharClass(k, PartitionPolynomial(terms, k))


def ch_tangent_reduced(k):
    """ch(T_C M - C^(4k)): the rank-zero reduction of the tangent character."""
    return ch_tangent(k) - 4 * k


def adams(c, m):
    """Adams operation on a character: ps_j -> m^(2j) ps_j, rank part unchanged."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("Adams operations need an integer m >= 1")
    f = Fraction(m)
    return CharClass(c.k, c.poly.scale_monomials(lambda w: f ** (2 * w)))


def _power_log_series(base, t_order, alternating):
    k = base.k
    coeffs = [CharClass.zero(k)]
    for m in range(1, t_order):
        sign = (-1) ** (m + 1) if alternating else 1
        coeffs.append(adams(base, m) * Fraction(sign, m))
    return ZSeries(coeffs, t_order)


def ch_s_t(base, t_order):
    """ch of the total symmetric power S_t(base) as a t-series of CharClasses."""
    return _power_log_series(base, t_order, alternating=False).exp()


def ch_lambda_t(base, t_order):
    """ch of the total exterior power Lambda_t(base) as a t-series of CharClasses."""
    return _power_log_series(base, t_order, alternating=True).exp()


def ch_lambda_power(base, j):
    """ch of Lambda^j(base), read off the total exterior power."""
    return ch_lambda_t(base, j + 1).coeffs[j]


class WittenBundleCh:
    """Chern character of a Witten bundle: a nu-series with CharClass coefficients.

    kind 1 (symmetric/exterior powers at t = q^n, q^m) has only integer
    q-powers; kind 2 substitutes t = -q^(m-1/2) in the exterior factors.
    The nu^0 coefficient is the class 1.
    """

    __slots__ = ("kind", "series")

    def __init__(self, kind, series):
        if kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        if series.order < 1 or not (series.coeffs[0] == 1):
            raise ValueError("Witten bundle character must start with the class 1")
        if kind == 1:
            for i in range(1, series.order, 2):
                if not (series.coeffs[i] == 0):
                    raise ValueError("kind-1 Witten bundle has integer q-powers only")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "series", series)

    def __setattr__(self, name, value):
        raise AttributeError("WittenBundleCh is immutable")


@lru_cache(maxsize=None)
def witten_bundle_ch(kind, k, q_order):
    """Exact nu-expansion of ch Theta_kind(T_C M) through q^q_order."""
    nu_order = 2 * q_order + 1
    base = ch_tangent_reduced(k)
    psi = {}

    def chpsi(m):
        if m not in psi:
            psi[m] = adams(base, m)
        return psi[m]

    acc = [CharClass.zero(k) for _ in range(nu_order)]
    for m in range(1, nu_order):
        # symmetric factors: t = q^n contributes q^(n*m) ch(psi^m)/m
        n = 1
        while 2 * n * m < nu_order:
            acc[2 * n * m] = acc[2 * n * m] + chpsi(m) * Fraction(1, m)
            n += 1
        if kind == 1:
            # exterior factors at t = q^j: (-1)^(m+1) q^(j*m) ch(psi^m)/m
            sign = Fraction((-1) ** (m + 1), m)
            j = 1
            while 2 * j * m < nu_order:
                acc[2 * j * m] = acc[2 * j * m] + chpsi(m) * sign
                j += 1
        else:
            # exterior factors at t = -q^(j-1/2): every term lands negative
            j = 1
            while m * (2 * j - 1) < nu_order:
                acc[m * (2 * j - 1)] = acc[m * (2 * j - 1)] - chpsi(m) * Fraction(1, m)
                j += 1
    log_ch = QSeries(acc, nu_order)
    return WittenBundleCh(kind, log_ch.exp())


@lru_cache(maxsize=None)
def _multiplicative_class(which, k):
    """CharClass of a multiplicative class given its per-root even series."""
    order = 2 * k + 1
    if which == "ahat":
        # (z/2)/sinh(z/2): constant 1
        per_root = (2 * sinh_half(order + 1)).shift_down(1).invert()
    elif which == "lhat":
        # z/tanh(z/2): constant 2
        per_root = cosh_half(order) * sinh_half(order + 1).shift_down(1).invert()
    else:
        raise ValueError("unknown multiplicative class %r" % (which,))
    c0 = per_root.coeffs[0]
    logs = (per_root * (Fraction(1) / c0)).log()
    total = PartitionPolynomial.zero(k)
    for j in range(1, k + 1):
        total = total + PartitionPolynomial.generator(j, k) * logs.coeffs[2 * j]
    cls = exp_positive_weight(total)
    return CharClass(k, cls * (c0 ** (2 * k)))


def a_hat_class(k):
    """Multiplicative A-hat class from (z/2)/sinh(z/2); degree-0 part 1."""
    return _multiplicative_class("ahat", k)


def l_hat_class(k):
    """Multiplicative L-hat class from z/tanh(z/2); degree-0 part 2^(2k)."""
    return _multiplicative_class("lhat", k)


def genus_functional(char):
    """The pairing polynomial of a CharClass: its weight-k part in the p-basis."""
    top = char.poly.weight_part(char.k)
    e_poly = powersum_poly_to_elementary(top).weight_part(char.k)
    return GenusPolynomial(char.k, dict(e_poly.terms))


def twisted_genus(which, twist, vector):
    """Pair an A-hat or L-hat class, optionally twisted, with Pontryagin numbers.

    `which` is "ahat" or "sig"; `twist` is None, a CharClass, or a
    WittenBundleCh (giving the q-series-valued twisted index).
    """
    if which not in ("ahat", "sig"):
        raise ValueError("which must be 'ahat' or 'sig'")
    k = vector.k
    base = a_hat_class(k) if which == "ahat" else l_hat_class(k)
    if twist is None:
        return genus_functional(base).evaluate(vector)
    if isinstance(twist, CharClass):
        if twist.k != k:
            raise ValueError("twist dimension mismatch")
        return genus_functional(base * twist).evaluate(vector)
    if isinstance(twist, WittenBundleCh):
        series = twist.series
        values = []
        for c in series.coeffs:
            if isinstance(c, CharClass):
                values.append(genus_functional(base * c).evaluate(vector))
            else:  # exact scalar padding
                values.append(genus_functional(base * CharClass.constant(c, k)).evaluate(vector))
        return QSeries(values, series.order)
    raise TypeError("unsupported twist %r" % (twist,))


@lru_cache(maxsize=None)
def elliptic_functional(kind, k, q_order):
    """Twisted-index genus polynomial with q-series coefficients.

    kind 1 is the L-hat pairing with Theta_1 (the 2^(2k)-scaled twisted
    signature expansion); kind 2 is the A-hat pairing with Theta_2.
    Evaluating on a PontryaginVector yields the exact q-expansion.
    """
    base = l_hat_class(k) if kind == 1 else a_hat_class(k)
    th = witten_bundle_ch(kind, k, q_order)
    series = th.series
    per_nu = []
    for c in series.coeffs:
        if not isinstance(c, CharClass):
            c = CharClass.constant(c, k)
        per_nu.append(genus_functional(base * c))
    coefficients = {}
    for p in partitions_of(k):
        coefficients[p] = QSeries([g.coefficients[p] for g in per_nu], series.order)
    return GenusPolynomial(k, coefficients)
