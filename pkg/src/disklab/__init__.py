"""Numerical laboratory for Dirichlet-space function theory on the unit disk."""

from .series import (
    AnalyticPoly,
    dirichlet_norm,
    dirichlet_pair,
    hardy_norm,
    tilde_norm,
    multiply,
    differentiate,
    evaluate,
    modulus_coeffs,
    multiplier_norm_truncated,
    monomial,
    one,
    zero,
)
from .geometry import DiskPoint, ORIGIN, pseudo_hyperbolic, hyperbolic
from .kernels import (
    KernelSpec,
    kernel_poly,
    kernel_norms,
    kernel_diff_norm,
    reproduce,
    kernel_dot,
)
from .quadrature import (
    QuadratureSpec,
    disk_integral,
    disk_integral_boundary,
    radial_integral,
)
from .carleson import (
    RadialMeasure,
    ComplexAtomicMeasure,
    cm_norm_radial,
    cm_embedding_check,
    segment_sufficient_constant,
    x_norm_monomial,
    x_sufficient_tests,
    dirichlet_projection,
    balayage,
    majorant,
)
from .weakprod import (
    Factorization,
    NormBracket,
    upper_bound,
    optimize_factorization,
    lower_certificate_measure,
    lower_certificate_duality,
    hardy_type_sum,
    paley_sum,
    is_lacunary,
)
from .hankel import (
    HankelMatrix,
    build_matrix,
    hankel_apply,
    hs_norm,
    hs_weight,
    hs_integral,
    schatten,
    h_zeta_experiment,
    besov1_norm,
    besov1_log_norm,
    lacunary_gap_demo,
)
from .interpolation import (
    PointSequence,
    separation_constant,
    mu_Z,
    gram,
    interp_diagnostics,
    d_interpolate,
    dd_interpolate,
)
from .special import (
    BumpSpec,
    bump_factor_norms,
    bump_derivative_pairing,
    h_function,
    sqrt_kernel_norm,
    power_growth_check,
)

__version__ = "0.1.0"
