"""Exact-arithmetic elliptic genera and dimension-24 string cobordism tools."""

__version__ = "0.1.0"

from .series import (
    Rational,
    QSeries,
    ZSeries,
    DeltaEpsPoly,
    rational_from_str,
    rational_to_str,
)
from .partitions import partitions_of, parse_partition, format_partition, PontryaginVector
from .genus import (
    GenusPolynomial,
    elliptic_log,
    universal_f,
    genus_polynomial,
    genus_polynomial_by_root_expansion,
    evaluate_genus,
    specialize,
    universal_elliptic_genus,
)
from .modular import (
    ThetaConstant,
    JacobiSolution,
    theta_constant,
    delta1,
    eps1,
    delta2,
    eps2,
    divisor_sum_oracle,
    e4,
    discriminant,
    delta_bar,
    jacobi_solution,
)
from .twist import (
    CharClass,
    WittenBundleCh,
    ch_tangent,
    ch_tangent_reduced,
    adams,
    ch_lambda_t,
    ch_s_t,
    ch_lambda_power,
    witten_bundle_ch,
    a_hat_class,
    l_hat_class,
    genus_functional,
    twisted_genus,
    elliptic_functional,
)
from .string24 import (
    EllipticClass24,
    IndexQuadruple,
    ClassificationReport,
    a_from_indices_matrix,
    sig_t_from_string_indices,
    a_from_kappa_matrix,
    kappa_basis_matrix,
    image_matrix,
    image_matrix_8delta,
    image_lattice_hnf,
    lattice_membership,
    kappa_from_a,
    a_from_kappa,
    witten_genus_24,
    classify,
)
from .records import ManifoldRecord, load_records, load_catalog
from .verify import run_suite
