"""Numerical toolkit for Legendre/Bessel special functions and the
verification of sign-partitioned Lp norm asymmetry of zonal harmonics."""

from ._version import __version__
from .bessel import (
    BesselZeroRecord,
    BesselZeroTable,
    eval_j0,
    eval_j1,
    j1_zeros,
    szego_envelope,
)
from .errors import (
    BracketError,
    ConfigError,
    ConvergenceError,
    DegreeCapError,
    DomainError,
)
from .legendre import (
    DEGREE_CAP,
    bernstein_envelope,
    eval_legendre,
    eval_legendre_derivative,
    eval_legendre_second,
)
from .norms import (
    NormReport,
    QuadratureConfig,
    arch_integral_above_largest_zero,
    darboux_upper_bound,
    norm_ratio,
    positive_part_lower_bound,
    signed_lp_integrals,
    symmetric_lp_integrals,
    triangle_lower_bound,
)
from .report import emit_table, format_float
from .roots import (
    ExtremaTable,
    ExtremumRecord,
    InterlacingReport,
    ZeroRecord,
    ZeroTable,
    bruns_bracket,
    check_interlacing,
    extremum_magnitude,
    largest_zero,
    legendre_extrema,
    legendre_zeros,
)
from .series import (
    PMonotonicityReport,
    SeriesResult,
    bessel_extrema_sum,
    hurwitz_identity_residual,
    p_monotonicity_check,
    prop_limit_lower_bound,
    zeta3,
)
from .verify import (
    CheckResult,
    VerificationReport,
    VerifyConfig,
    run_all,
    verify_cooper,
    verify_lemma_pn_le_x,
    verify_linfty_ratio,
    verify_main_theorem,
)

__all__ = [
    "__version__",
    "DEGREE_CAP",
    "eval_legendre",
    "eval_legendre_derivative",
    "eval_legendre_second",
    "bernstein_envelope",
    "ZeroRecord",
    "ZeroTable",
    "ExtremumRecord",
    "ExtremaTable",
    "InterlacingReport",
    "bruns_bracket",
    "legendre_zeros",
    "legendre_extrema",
    "extremum_magnitude",
    "largest_zero",
    "check_interlacing",
    "BesselZeroRecord",
    "BesselZeroTable",
    "eval_j0",
    "eval_j1",
    "j1_zeros",
    "szego_envelope",
    "QuadratureConfig",
    "NormReport",
    "signed_lp_integrals",
    "symmetric_lp_integrals",
    "arch_integral_above_largest_zero",
    "norm_ratio",
    "triangle_lower_bound",
    "positive_part_lower_bound",
    "darboux_upper_bound",
    "SeriesResult",
    "PMonotonicityReport",
    "bessel_extrema_sum",
    "zeta3",
    "hurwitz_identity_residual",
    "prop_limit_lower_bound",
    "p_monotonicity_check",
    "CheckResult",
    "VerificationReport",
    "VerifyConfig",
    "run_all",
    "verify_lemma_pn_le_x",
    "verify_cooper",
    "verify_linfty_ratio",
    "verify_main_theorem",
    "emit_table",
    "format_float",
    "DomainError",
    "DegreeCapError",
    "ConvergenceError",
    "BracketError",
    "ConfigError",
]
