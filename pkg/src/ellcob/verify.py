"""Self-contained verification suite for every identity the library rests on.

`run_suite("fast")` keeps truncation orders low (k <= 2 oracles, q^5
divisor sums); `run_suite("full")` pushes the same checks to the deep
orders (q^10 divisor sums, z-order-12 quartic residuals, the k = 6
cross-path) and is budgeted for minutes, though it currently runs in
about a second.  Check order and naming are deterministic.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .series import DeltaEpsPoly, ZSeries
from .partitions import PontryaginVector
from .genus import (
    elliptic_log,
    universal_f,
    char_series_from_f,
    genus_polynomial,
    genus_polynomial_by_root_expansion,
    universal_elliptic_genus,
)
from .modular import (
    delta1, eps1, delta2, eps2, divisor_sum_oracle, e4, discriminant, delta_bar,
    jacobi_solution, sinh_half, cosh_half, sinh_z, cosh_z,
)
from .twist import (
    a_hat_class, l_hat_class, ch_tangent, genus_functional, elliptic_functional,
)
from . import string24


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


_LEVELS = {
    "fast": {
        "divisor_nu": 11,     # through q^5
        "jacobi_z": 9,        # residual checked through z^7
        "jacobi_q": 2,
        "q0_z": 10,
        "universal_z": 10,
        "oracle_kmax": 2,
        "cross_ks": ((2, 1),),
        "vectors": 4,
        "direct_route": False,
    },
    "full": {
        "divisor_nu": 21,     # through q^10
        "jacobi_z": 14,       # residual checked through z^12
        "jacobi_q": 6,
        "q0_z": 16,
        "universal_z": 14,
        "oracle_kmax": 3,
        "cross_ks": ((2, 2), (6, 3)),
        "vectors": 10,
        "direct_route": True,
    },
}


def _expect(cond, detail):
    if not cond:
        raise AssertionError(detail)


def _leading(series, n):
    return [series.coeffs[i] for i in range(n)]


def _check_theta_divisor(p):
    n = p["divisor_nu"]
    for name, fn in (("delta1", delta1), ("eps1", eps1), ("delta2", delta2), ("eps2", eps2)):
        _expect(fn(n) == divisor_sum_oracle(name, n),
                "%s: theta products disagree with divisor sums" % name)
    return "theta products equal divisor sums below nu^%d" % n


def _check_modular_leading(p):
    n = 7
    _expect(_leading(delta1(n), 6) == [Fraction(1, 4), 0, 6, 0, 6, 0], "delta1 leading terms")
    _expect(_leading(eps1(n), 6) == [Fraction(1, 16), 0, -1, 0, 7, 0], "eps1 leading terms")
    _expect(_leading(delta2(n), 3) == [Fraction(-1, 8), -3, -3], "delta2 leading terms")
    _expect(_leading(eps2(n), 3) == [0, 1, 8], "eps2 leading terms")
    return "delta1=1/4+6q+6q^2, eps1=1/16-q+7q^2, delta2=-1/8-3q^(1/2)-3q, eps2=q^(1/2)+8q"


def _check_eisenstein(p):
    n = 9
    _expect([e4(n).coefficient_q(i) for i in range(3)] == [1, 240, 2160], "E4 leading terms")
    _expect([discriminant(n).coefficient_q(i) for i in range(4)] == [0, 1, -24, 252],
            "Delta leading terms")
    _expect([delta_bar(n).coefficient_q(i) for i in range(2)] == [1, -24],
            "DeltaBar leading terms")
    return "E4 = 1+240q+2160q^2, Delta = q-24q^2+252q^3, DeltaBar = 1-24q"


def _jacobi_residual(kind, p):
    sol = jacobi_solution(kind, p["jacobi_z"], p["jacobi_q"])
    nu = 2 * p["jacobi_q"] + 1
    d = (delta1 if kind == 1 else delta2)(nu)
    e = (eps1 if kind == 1 else eps2)(nu)
    res = sol.quartic_residual(d, e)
    _expect(res == 0, "quartic residual of F%d is nonzero: %r" % (kind, res))
    return "(F%d')^2 = 1 - 2*delta%d*F%d^2 + eps%d*F%d^4 below z^%d, through q^%d" % (
        kind, kind, kind, kind, kind, res.order, p["jacobi_q"])


def _check_jacobi_f1(p):
    return _jacobi_residual(1, p)


def _check_jacobi_f2(p):
    return _jacobi_residual(2, p)


def _check_jacobi_q0(p):
    z = p["q0_z"]
    f1 = jacobi_solution(1, z, 0).at_q_zero()
    f2 = jacobi_solution(2, z, 0).at_q_zero()
    tanh2 = (2 * sinh_half(z)) * cosh_half(z).invert()
    sinh2 = 2 * sinh_half(z)
    _expect(f1 == tanh2, "F1 at q=0 is not 2*tanh(z/2)")
    _expect(f2 == sinh2, "F2 at q=0 is not 2*sinh(z/2)")
    return "q=0 limits: F1 -> 2tanh(z/2), F2 -> 2sinh(z/2) below z^%d" % z


def _check_universal_quartic(p):
    z = p["universal_z"]
    f = universal_f(z)
    df = f.derivative()
    f2 = f * f
    res = df * df - (1 - (2 * DeltaEpsPoly.delta()) * f2 + DeltaEpsPoly.eps() * (f2 * f2))
    _expect(res == 0, "universal f does not solve the quartic")
    g = elliptic_log(z)
    _expect(g.compose(f) == ZSeries.var(min(g.order, f.order)), "g(f(z)) != z")
    return "(f')^2 = 1 - 2*delta*f^2 + eps*f^4 and g(f(z)) = z below z^%d" % res.order


def _check_genus_oracle(p):
    kmax = p["oracle_kmax"]
    for k in range(1, kmax + 1):
        f = universal_f(2 * k + 2)
        Q = char_series_from_f(f)
        newton = genus_polynomial(Q, k)
        roots = genus_polynomial_by_root_expansion(Q, k)
        _expect(newton == roots, "universal genus: Newton vs roots differ at k=%d" % k)

        n = 2 * k + 2
        sig_q = (sinh_z(n) * cosh_z(n).invert()).shift_down(1).invert()  # z/tanh z
        _expect(newton.specialize(1, 1) == genus_polynomial_by_root_expansion(sig_q, k),
                "signature specialization vs roots differ at k=%d" % k)
        ahat_q = (2 * sinh_half(n)).shift_down(1).invert()  # (z/2)/sinh(z/2)
        _expect(
            newton.specialize(Fraction(-1, 8), 0)
            == genus_polynomial_by_root_expansion(ahat_q, k),
            "A-hat specialization vs roots differ at k=%d" % k)
    return "Newton path equals formal-root expansion for k <= %d (all partitions)" % kmax


def _cp_vector(n):
    """Pontryagin numbers of CP^(2n): p_j = C(2n+1, j), fundamental pairing 1."""
    import math
    from .partitions import partitions_of
    numbers = {}
    for part in partitions_of(n):
        v = 1
        for j in part:
            v *= math.comb(2 * n + 1, j)
        numbers[part] = v
    return PontryaginVector(n, numbers)


def _check_cp_logarithm(p):
    g = elliptic_log(6)
    gp = g.derivative()
    for n in (1, 2):
        val = universal_elliptic_genus(n).evaluate(_cp_vector(n))
        _expect(val == gp.coeffs[2 * n],
                "genus of CP^%d does not match the z^%d coefficient of g'" % (2 * n, 2 * n))
    return "g'(z) generates the genus values of CP^2 and CP^4"


def _index_values(v):
    k = v.k
    ahat = a_hat_class(k)
    lhat = l_hat_class(k)
    cht = ch_tangent(k)
    return {
        "ahat": genus_functional(ahat).evaluate(v),
        "ahat_t": genus_functional(ahat * cht).evaluate(v),
        "sig": genus_functional(lhat).evaluate(v),
        "sig_t": genus_functional(lhat * cht).evaluate(v),
    }


def _check_eq34(p):
    rng = random.Random(20240)
    ell1 = elliptic_functional(1, 6, 1)
    ell2 = elliptic_functional(2, 6, 1)
    univ = universal_elliptic_genus(6)
    for _ in range(p["vectors"]):
        v = PontryaginVector.random(6, rng)
        idx = _index_values(v)
        e1 = ell1.evaluate(v)
        e2 = ell2.evaluate(v)
        _expect(e1.coeffs[0] == idx["sig"], "Ell1 constant term is not Sig")
        _expect(e1.coeffs[2] == 2 * idx["sig_t"] - 48 * idx["sig"],
                "Ell1 q-coefficient is not 2Sig(T) - 48Sig")
        _expect(e1.coeffs[1] == 0, "Ell1 has a half-power term")
        _expect(e2.coeffs[0] == idx["ahat"], "Ell2 constant term is not Ahat")
        _expect(e2.coeffs[1] == -(idx["ahat_t"] - 24 * idx["ahat"]),
                "Ell2 q^(1/2)-coefficient is not -(Ahat(T) - 24Ahat)")
        phi = univ.evaluate(v)
        _expect(phi.substitute(1, 1) == idx["sig"], "Sig disagrees with the (1,1) genus")
        _expect(phi.substitute(Fraction(-1, 8), 0) == idx["ahat"],
                "Ahat disagrees with the (-1/8, 0) genus")
    return ("Ell1 = Sig + (2Sig(T)-48Sig)q + ..., Ell2 = Ahat - (Ahat(T)-24Ahat)q^(1/2) + ... "
            "on %d random vectors" % p["vectors"])


def _cross_path(kind, k, q_order, count):
    rng = random.Random(777 + kind)
    nu = 2 * q_order + 1
    d = (delta1 if kind == 1 else delta2)(nu)
    e = (eps1 if kind == 1 else eps2)(nu)
    ell = elliptic_functional(kind, k, q_order)
    univ = universal_elliptic_genus(k)
    scale = 4 ** k if kind == 1 else 1
    for _ in range(count):
        v = PontryaginVector.random(k, rng)
        lhs = ell.evaluate(v)
        rhs = univ.evaluate(v).substitute(d, e) * scale
        _expect(lhs == rhs, "twisted index vs substituted genus differ (kind %d, k=%d)"
                % (kind, k))


def _check_cross_path_ell1(p):
    for k, q in p["cross_ks"]:
        _cross_path(1, k, q, p["vectors"])
    return "Ell1 = 2^(2k) * genus(delta1(q), eps1(q)) per q-coefficient at " + ", ".join(
        "k=%d (q^%d)" % (k, q) for k, q in p["cross_ks"])


def _check_cross_path_ell2(p):
    for k, q in p["cross_ks"]:
        _cross_path(2, k, q, p["vectors"])
    return "Ell2 = genus(delta2(q), eps2(q)) per q-coefficient at " + ", ".join(
        "k=%d (q^%d)" % (k, q) for k, q in p["cross_ks"])


def _check_direct_route(p):
    if not p["direct_route"]:
        return "skipped at this level (run full)"
    rng = random.Random(4242)
    k, q_order = 2, 2
    nu = 2 * q_order + 1
    for kind in (1, 2):
        F = jacobi_solution(kind, 2 * k + 2, q_order).series
        Q = F.shift_down(1).invert()
        direct = genus_polynomial(Q, k)
        ell = elliptic_functional(kind, k, q_order)
        scale = 4 ** k if kind == 1 else 1
        for _ in range(p["vectors"]):
            v = PontryaginVector.random(k, rng)
            _expect(direct.evaluate(v) * scale == ell.evaluate(v),
                    "direct z/F%d genus differs from the twisted index" % kind)
    return "genus of z/F_i matches the twisted-index route at k=%d" % k


def _check_index_matrix(p):
    m = string24.a_from_indices_matrix()
    _expect(m.rows[0] == (262144, 0, 0, 0), "a0 row")
    _expect(m.rows[1] == (-491520, -4096, 0, 0), "a1 row")
    _expect(m.rows[2] == (196608, 8192, Fraction(1, 32), 0), "a2 row")
    _expect(m.rows[3] == (32768, -4096, Fraction(-1, 32), 1), "a3 row")
    return "solved oriented-index matrix matches all 16 expected entries"


def _check_kappa_matrix(p):
    m = string24.a_from_kappa_matrix()
    _expect(m.column(0) == (262144, -491520, 254208, -24832), "column 1")
    _expect(m.column(1) == (0, -98304, 124416, -26112), "column 2")
    _expect(m.column(2) == (0, 0, 64, -64), "column 3")
    _expect(m.column(3) == (0, 0, 0, 8), "column 4")
    _expect(m.determinant() != 0, "kappa matrix must be nonsingular")
    return "derived kappa matrix matches all 16 expected entries; det != 0"


def _check_sig_relation(p):
    f = string24.sig_t_from_string_indices
    _expect(f(0, 0, 0) == 0, "zero case")
    _expect(f(1, 0, 0) == 1843200, "Ahat coefficient")
    _expect(f(0, 1, 0) == -96256, "Ahat(T) coefficient")
    _expect(f(0, 0, 1) == 2048, "Ahat(Lambda^2) coefficient")
    return "Sig(T) relation coefficients: 2^11 * (900, -47, 1)"


def _check_basis_det(p):
    K = string24.kappa_basis_matrix()
    _expect(K.determinant() in (1, -1), "kappa basis must be unimodular")
    return "det of the kappa-basis matrix is %d" % K.determinant()


def _check_image_matrix(p):
    m = string24.image_matrix()
    _expect(m.column(0) == (0, 98304, -55296, 331776), "image column 1")
    _expect(m.column(1) == (262144, -491520, 14211072, -13602816), "image column 2")
    _expect(m.column(2) == (0, 0, -64, 288), "image column 3")
    _expect(m.column(3) == (0, 0, 0, 8), "image column 4")
    return "generator-image matrix matches all 16 expected entries"


def _check_image_hnf(p):
    h = string24.image_lattice_hnf()
    want = ((1, 0, 0, 0), (0, 24, 0, 0), (0, 0, 1, 0), (0, 0, 0, 8))
    _expect(h == want, "image HNF is %r, expected diag(1,24,1,8)" % (h,))
    return "column HNF of the (8d)-basis image is diag(1, 24, 1, 8); lattice index 192"


def _check_kappa_roundtrip(p):
    rng = random.Random(99)
    Kinv = string24.kappa_basis_matrix().inverse()
    for _ in range(p["vectors"]):
        kappa = tuple(rng.randint(-50, 50) for _ in range(4))
        a8 = string24.EllipticClass24(*string24.a_from_kappa(kappa)).in_8delta_basis()
        _expect(all(v.denominator == 1 for v in a8), "a is not integral in the (8d)-basis")
        coords = string24.lattice_membership([int(v) for v in a8])
        want = tuple(int(x) for x in Kinv.apply(kappa))
        _expect(coords == want, "membership coordinates differ from K^-1 kappa")
        report = string24.classify(kappa)
        _expect(report.bounds_string == (kappa == (0, 0, 0, 0)), "bounding verdict wrong")
    return "lattice membership of a(kappa) returns K^-1 kappa on %d random quadruples" % p["vectors"]


def _check_witten_fixtures(p):
    w1 = string24.witten_genus_24((1, 0, 0, 0), 3)
    _expect([w1.coefficient_q(i) for i in range(2)] == [1, -24], "kappa=(1,0,..) Witten genus")
    w2 = string24.witten_genus_24((0, 1, 0, 0), 3)
    _expect([w2.coefficient_q(i) for i in range(3)] == [0, 24, -576], "kappa=(0,1,..) Witten genus")
    _expect(string24.witten_genus_24((0, 0, 0, 0), 3) == 0, "kappa=0 Witten genus")
    return "W(1,0,*,*) = 1 - 24q + ..., W(0,1,*,*) = 24q - 576q^2 + ..., W(0) = 0"


def _check_witten_modular_identity(p):
    if not p["direct_route"]:
        return "skipped at this level (run full)"
    # Pairing A-hat with the pure symmetric-power bundle must reproduce
    # Ahat*DeltaBar + Ahat(T)*Delta on p1-free Pontryagin data; the two
    # sides come from disjoint code paths (Adams operations vs divisor sums).
    from .series import QSeries
    from .twist import CharClass, adams, ch_tangent_reduced
    from .partitions import partitions_of

    k, q_order = 6, 3
    nu = 2 * q_order + 1
    red = ch_tangent_reduced(k)
    acc = [CharClass.zero(k) for _ in range(nu)]
    for m in range(1, nu):
        chpsi = adams(red, m)
        n = 1
        while 2 * n * m < nu:
            acc[2 * n * m] = acc[2 * n * m] + chpsi * Fraction(1, m)
            n += 1
    theta_s = QSeries(acc, nu).exp()
    ahat = a_hat_class(k)
    per_nu = [
        genus_functional(ahat * (c if isinstance(c, CharClass) else CharClass.constant(c, k)))
        for c in theta_s.coeffs
    ]
    f_ahat = genus_functional(ahat)
    f_ahat_t = genus_functional(ahat * ch_tangent(k))
    one_free = [q for q in partitions_of(k) if 1 not in q]
    rng = random.Random(505)
    from .modular import delta_bar as dbar, discriminant as disc
    for _ in range(p["vectors"]):
        numbers = {q: (rng.randint(-9, 9) if q in one_free else 0) for q in partitions_of(k)}
        v = PontryaginVector(k, numbers)
        lhs = QSeries([g.evaluate(v) for g in per_nu], nu)
        rhs = dbar(nu) * f_ahat.evaluate(v) + disc(nu) * f_ahat_t.evaluate(v)
        _expect(lhs == rhs, "symmetric-power index disagrees with Ahat*DeltaBar + Ahat(T)*Delta")
    return "dim-24 Witten genus identity on %d p1-free vectors through q^3" % p["vectors"]


_CHECKS = (
    ("theta-divisor-agreement", _check_theta_divisor),
    ("modular-leading-terms", _check_modular_leading),
    ("eisenstein-discriminant", _check_eisenstein),
    ("jacobi-quartic-f1", _check_jacobi_f1),
    ("jacobi-quartic-f2", _check_jacobi_f2),
    ("jacobi-q0-limits", _check_jacobi_q0),
    ("universal-f-quartic", _check_universal_quartic),
    ("genus-newton-vs-roots", _check_genus_oracle),
    ("cp-logarithm-property", _check_cp_logarithm),
    ("eq34-expansions", _check_eq34),
    ("cross-path-ell1", _check_cross_path_ell1),
    ("cross-path-ell2", _check_cross_path_ell2),
    ("jacobi-genus-direct", _check_direct_route),
    ("index-matrix", _check_index_matrix),
    ("kappa-matrix", _check_kappa_matrix),
    ("string-sig-relation", _check_sig_relation),
    ("basis-determinant", _check_basis_det),
    ("image-matrix", _check_image_matrix),
    ("image-hnf", _check_image_hnf),
    ("kappa-roundtrip", _check_kappa_roundtrip),
    ("witten-fixtures", _check_witten_fixtures),
    ("witten-modular-identity", _check_witten_modular_identity),
)


def run_suite(level="fast"):
    """Run every check at the given level; returns a deterministic list of Check."""
    if level not in _LEVELS:
        raise ValueError("level must be 'fast' or 'full'")
    params = _LEVELS[level]
    results = []
    for name, fn in _CHECKS:
        try:
            detail = fn(params)
            results.append(Check(name, True, detail))
        except AssertionError as exc:
            results.append(Check(name, False, str(exc)))
        except Exception as exc:  # a crash is a failure, not a crash of the suite
            results.append(Check(name, False, "%s: %s" % (type(exc).__name__, exc)))
    return results
