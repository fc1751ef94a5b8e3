"""q-expansions of theta constants, modular parameters, and Jacobi-quartic solutions.

Everything is a formal expansion: tau never becomes a number, q enters only
as the formal variable nu^2 (nu = q^(1/2)), and eighth powers of q are
tracked as an integer count on ThetaConstant so that no fractional
exponent ever reaches an exported series.

The genus variable z used here absorbs the 2*pi*sqrt(-1) of the classical
theta arguments: exponentials e^(+-2*pi*i*v) become e^(+-z) and the
trigonometric prefactors become hyperbolic functions of z/2, so every
exported coefficient is an exact rational.  The two Jacobi-quartic
solutions are then

    F1(z) = 2*tanh(z/2) * prod_j (1 - e^z q^j)(1 - e^-z q^j)(1 + q^j)^2
                                / [(1 - q^j)^2 (1 + e^z q^j)(1 + e^-z q^j)]
    F2(z) = 2*sinh(z/2) * prod_j (1 - e^z q^j)(1 - e^-z q^j)(1 - q^(j-1/2))^2
                                / [(1 - q^j)^2 (1 - e^z q^(j-1/2))(1 - e^-z q^(j-1/2))]

with F_i = z + O(z^3) and (F_i')^2 = 1 - 2*delta_i*F_i^2 + eps_i*F_i^4
for the matching modular parameters delta_i, eps_i.

All functions are pure and all values immutable; the lru_cache memoization
is deterministic and safe under the GIL.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .series import QSeries, ZSeries

_THETA_NAMES = ("theta", "theta1", "theta2", "theta3", "theta_prime")


class ThetaConstant:
    """A theta value at v = 0: an overall q^(e/8) prefactor times a nu-series body.

    Products and quotients add/subtract the prefactor count; export to a
    plain QSeries is legal only when the accumulated prefactor resolves to
    a whole power of nu (e divisible by 4).  Exporting an unresolved
    fractional prefactor is a hard error, never a silent truncation.
    """

    __slots__ = ("prefactor_eighths", "body")

    def __init__(self, prefactor_eighths, body):
        object.__setattr__(self, "prefactor_eighths", int(prefactor_eighths))
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("ThetaConstant is immutable")

    def __mul__(self, other):
        if isinstance(other, ThetaConstant):
            return ThetaConstant(
                self.prefactor_eighths + other.prefactor_eighths, self.body * other.body
            )
        return ThetaConstant(self.prefactor_eighths, self.body * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ThetaConstant):
            return ThetaConstant(
                self.prefactor_eighths - other.prefactor_eighths,
                self.body * other.body.invert(),
            )
        return ThetaConstant(self.prefactor_eighths, self.body * (Fraction(1) / other))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("theta powers must be non-negative integers")
        return ThetaConstant(self.prefactor_eighths * n, self.body ** n)

    def to_qseries(self):
        """Resolve the prefactor into nu powers; error if it is fractional."""
        if self.body.is_zero():
            return QSeries.zero(self.body.order)
        e = self.prefactor_eighths
        if e % 4 != 0:
            raise ValueError(
                "unresolved fractional q-prefactor q^(%d/8) cannot be exported" % e
            )
        shift = e // 4
        if shift < 0:
            raise ValueError("negative q-prefactor q^(%d/8) cannot be exported" % e)
        return self.body.shift_up(shift)

    def __repr__(self):
        return "ThetaConstant(q^(%d/8) * %r)" % (self.prefactor_eighths, self.body)


def _product_factor_count(nu_order):
    # factor j deviates from 1 only at q^(j-1/2) or later, i.e. nu^(2j-1)
    return nu_order // 2 + 1


def _euler_product(nu_order, factor_fn, n_factors):
    out = QSeries.one(nu_order)
    for j in range(1, n_factors + 1):
        out = out * factor_fn(j)
    return out


def _one_plus_nu_power(c, exponent, nu_order):
    if exponent >= nu_order:
        return QSeries.one(nu_order)
    return QSeries.from_terms([[0, Fraction(1)], [exponent, Fraction(c)]], nu_order)


@lru_cache(maxsize=None)
def theta_constant(which, nu_order, n_factors=None):
    """Truncated v = 0 theta data as a ThetaConstant.

    theta itself vanishes at v = 0 (the zero expansion is returned);
    theta_prime is its v-derivative there, with the overall pi factor
    dropped since it cancels in every ratio this library forms.
    """
    if which not in _THETA_NAMES:
        raise ValueError("unknown theta constant %r" % (which,))
    if n_factors is None:
        n_factors = _product_factor_count(nu_order)
    if which == "theta":
        return ThetaConstant(1, QSeries.zero(nu_order))
    if which == "theta1":
        def factor(j):
            return (_one_plus_nu_power(-1, 2 * j, nu_order)
                    * _one_plus_nu_power(1, 2 * j, nu_order) ** 2)
        return ThetaConstant(1, 2 * _euler_product(nu_order, factor, n_factors))
    if which == "theta2":
        def factor(j):
            return (_one_plus_nu_power(-1, 2 * j, nu_order)
                    * _one_plus_nu_power(-1, 2 * j - 1, nu_order) ** 2)
        return ThetaConstant(0, _euler_product(nu_order, factor, n_factors))
    if which == "theta3":
        def factor(j):
            return (_one_plus_nu_power(-1, 2 * j, nu_order)
                    * _one_plus_nu_power(1, 2 * j - 1, nu_order) ** 2)
        return ThetaConstant(0, _euler_product(nu_order, factor, n_factors))
    # theta_prime
    def factor(j):
        return _one_plus_nu_power(-1, 2 * j, nu_order) ** 3
    return ThetaConstant(1, 2 * _euler_product(nu_order, factor, n_factors))


@lru_cache(maxsize=None)
def delta1(nu_order):
    """delta_1 = (theta2^4 + theta3^4)/8 = 1/4 + 6q + 6q^2 + ..."""
    t2 = theta_constant("theta2", nu_order) ** 4
    t3 = theta_constant("theta3", nu_order) ** 4
    return (t2.to_qseries() + t3.to_qseries()) * Fraction(1, 8)


@lru_cache(maxsize=None)
def eps1(nu_order):
    """eps_1 = theta2^4 * theta3^4 / 16 = 1/16 - q + 7q^2 - ..."""
    prod = theta_constant("theta2", nu_order) ** 4 * theta_constant("theta3", nu_order) ** 4
    return prod.to_qseries() * Fraction(1, 16)


@lru_cache(maxsize=None)
def delta2(nu_order):
    """delta_2 = -(theta1^4 + theta3^4)/8 = -1/8 - 3q^(1/2) - 3q - ..."""
    t1 = theta_constant("theta1", nu_order) ** 4
    t3 = theta_constant("theta3", nu_order) ** 4
    return (t1.to_qseries() + t3.to_qseries()) * Fraction(-1, 8)


@lru_cache(maxsize=None)
def eps2(nu_order):
    """eps_2 = theta1^4 * theta3^4 / 16 = q^(1/2) + 8q + ..."""
    prod = theta_constant("theta1", nu_order) ** 4 * theta_constant("theta3", nu_order) ** 4
    return (prod.to_qseries() * Fraction(1, 16)).truncate(nu_order)


MODULAR_PARAMETERS = {"delta1": delta1, "eps1": eps1, "delta2": delta2, "eps2": eps2}


def _odd_divisor_sum(n):
    return sum(d for d in range(1, n + 1) if n % d == 0 and d % 2 == 1)


def _sigma3_alternating(n):
    return sum((-1) ** d * d ** 3 for d in range(1, n + 1) if n % d == 0)


def _sigma3_odd_quotient(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0 and (n // d) % 2 == 1)


def sigma(k, n):
    """Sum of k-th powers of the divisors of n."""
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def divisor_sum_oracle(which, nu_order):
    """The same modular parameters from divisor sums alone (no theta products).

    delta1 = 1/4 + 6*sum sigma_odd(n) q^n
    eps1   = 1/16 + sum (sum_{d|n} (-1)^d d^3) q^n
    delta2 = -1/8 - 3*sum sigma_odd(n) q^(n/2)
    eps2   = sum (sum_{d|n, n/d odd} d^3) q^(n/2)
    """
    coeffs = [Fraction(0)] * nu_order
    if which == "delta1":
        coeffs[0] = Fraction(1, 4)
        for n in range(1, (nu_order - 1) // 2 + 1):
            coeffs[2 * n] = Fraction(6 * _odd_divisor_sum(n))
    elif which == "eps1":
        coeffs[0] = Fraction(1, 16)
        for n in range(1, (nu_order - 1) // 2 + 1):
            coeffs[2 * n] = Fraction(_sigma3_alternating(n))
    elif which == "delta2":
        coeffs[0] = Fraction(-1, 8)
        for n in range(1, nu_order):
            coeffs[n] = Fraction(-3 * _odd_divisor_sum(n))
    elif which == "eps2":
        for n in range(1, nu_order):
            coeffs[n] = Fraction(_sigma3_odd_quotient(n))
    else:
        raise ValueError("unknown modular parameter %r" % (which,))
    return QSeries(coeffs, nu_order)


@lru_cache(maxsize=None)
def e4(nu_order):
    """Eisenstein series E4 = 1 + 240 * sum sigma_3(n) q^n."""
    coeffs = [Fraction(0)] * nu_order
    coeffs[0] = Fraction(1)
    for n in range(1, (nu_order - 1) // 2 + 1):
        coeffs[2 * n] = Fraction(240 * sigma(3, n))
    return QSeries(coeffs, nu_order)


@lru_cache(maxsize=None)
def discriminant(nu_order):
    """Modular discriminant Delta = q * prod (1 - q^n)^24 = q - 24q^2 + 252q^3 - ..."""
    out = QSeries.one(nu_order)
    for j in range(1, nu_order // 2 + 2):
        out = out * _one_plus_nu_power(-1, 2 * j, nu_order) ** 24
    return out.shift_up(2).truncate(nu_order)


@lru_cache(maxsize=None)
def delta_bar(nu_order):
    """E4^3 - 744 * Delta; constant term 1."""
    return e4(nu_order) ** 3 - discriminant(nu_order) * 744


Q_EXPANDABLES = {
    "delta1": delta1,
    "eps1": eps1,
    "delta2": delta2,
    "eps2": eps2,
    "E4": e4,
    "Delta": discriminant,
    "DeltaBar": delta_bar,
}


# -- hyperbolic series in the internal z variable --------------------------

def exp_z(order, sign=1):
    """e^(sign*z) as an exact ZSeries."""
    return ZSeries([Fraction(sign ** n, math.factorial(n)) for n in range(order)], order)


def sinh_z(order):
    return ZSeries(
        [Fraction(0) if n % 2 == 0 else Fraction(1, math.factorial(n)) for n in range(order)],
        order,
        parity="odd",
    )


def cosh_z(order):
    return ZSeries(
        [Fraction(1, math.factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(order)],
        order,
        parity="even",
    )


def sinh_half(order):
    """sinh(z/2)."""
    half = Fraction(1, 2)
    return ZSeries(
        [Fraction(0) if n % 2 == 0 else half ** n * Fraction(1, math.factorial(n))
         for n in range(order)],
        order,
        parity="odd",
    )


def cosh_half(order):
    """cosh(z/2)."""
    half = Fraction(1, 2)
    return ZSeries(
        [half ** n * Fraction(1, math.factorial(n)) if n % 2 == 0 else Fraction(0)
         for n in range(order)],
        order,
        parity="even",
    )


class JacobiSolution:
    """An odd two-variable solution F(z) = z + O(z^3) of the Jacobi quartic.

    `series` is a ZSeries in z whose coefficients are QSeries in nu; kind 1
    pairs with (delta1, eps1), kind 2 with (delta2, eps2).
    """

    __slots__ = ("kind", "series")

    def __init__(self, kind, series):
        if kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        series = series.with_parity("odd")
        if series.order < 2 or not (series.coeffs[1] == 1):
            raise ValueError("a Jacobi solution must satisfy F = z + O(z^3)")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "series", series)

    def __setattr__(self, name, value):
        raise AttributeError("JacobiSolution is immutable")

    def at_q_zero(self):
        """The q = 0 limit as a plain ZSeries over Q."""
        coeffs = []
        for c in self.series.coeffs:
            if isinstance(c, QSeries):
                coeffs.append(c.coeffs[0] if c.order > 0 else Fraction(0))
            else:
                coeffs.append(c)
        return ZSeries(coeffs, self.series.order, parity="odd")

    def quartic_residual(self, delta_series, eps_series):
        """(F')^2 - (1 - 2*delta*F^2 + eps*F^4); identically zero when matched."""
        F = self.series
        dF = F.derivative()
        F2 = F * F
        F4 = F2 * F2
        return dF * dF - (1 - (2 * delta_series) * F2 + eps_series * F4)


def _exp_qpower_factor(exp_sign, term_sign, nu_exp, z_order, nu_order):
    """The two-variable factor 1 + term_sign * q-power * e^(exp_sign * z)."""
    if nu_exp >= nu_order:  # invisible below the truncation
        return ZSeries([QSeries.one(nu_order)], z_order)
    mono = QSeries.monomial(Fraction(term_sign), nu_exp, nu_order)
    coeffs = []
    for n in range(z_order):
        c = mono * Fraction(exp_sign ** n, math.factorial(n))
        if n == 0:
            c = c + 1
        coeffs.append(c)
    return ZSeries(coeffs, z_order)


def _lift_to_qseries_coefficients(zser, nu_order):
    return ZSeries(
        [QSeries.monomial(c, 0, nu_order) if c != 0 else QSeries.zero(nu_order)
         for c in zser.coeffs],
        zser.order,
    )


@lru_cache(maxsize=None)
def jacobi_solution(kind, z_order, q_order):
    """The Jacobi-quartic solution F_kind, valid below z^z_order and through q^q_order.

    q_order counts whole powers of q; the underlying nu-series keep
    2*q_order + 1 valid coefficients.
    """
    if z_order < 3 or q_order < 0:
        raise ValueError("need z_order >= 3 and q_order >= 0")
    nu_order = 2 * q_order + 1
    J = _product_factor_count(nu_order)

    num = _lift_to_qseries_coefficients(2 * sinh_half(z_order), nu_order)
    scalar_num = QSeries.one(nu_order)
    scalar_den = QSeries.one(nu_order)
    den = ZSeries([QSeries.one(nu_order)], z_order)

    for j in range(1, J + 1):
        if 2 * j < nu_order:
            num = num * _exp_qpower_factor(+1, -1, 2 * j, z_order, nu_order)
            num = num * _exp_qpower_factor(-1, -1, 2 * j, z_order, nu_order)
            scalar_den = scalar_den * _one_plus_nu_power(-1, 2 * j, nu_order) ** 2
        if kind == 1:
            if 2 * j < nu_order:
                scalar_num = scalar_num * _one_plus_nu_power(1, 2 * j, nu_order) ** 2
                den = den * _exp_qpower_factor(+1, +1, 2 * j, z_order, nu_order)
                den = den * _exp_qpower_factor(-1, +1, 2 * j, z_order, nu_order)
        else:
            if 2 * j - 1 < nu_order:
                scalar_num = scalar_num * _one_plus_nu_power(-1, 2 * j - 1, nu_order) ** 2
                den = den * _exp_qpower_factor(+1, -1, 2 * j - 1, z_order, nu_order)
                den = den * _exp_qpower_factor(-1, -1, 2 * j - 1, z_order, nu_order)

    if kind == 1:
        den = den * _lift_to_qseries_coefficients(cosh_half(z_order), nu_order)

    F = num * den.invert() * (scalar_num * scalar_den.invert())
    return JacobiSolution(kind, F)
