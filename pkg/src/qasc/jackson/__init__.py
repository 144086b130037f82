"""Jackson q-integrals, the U and V measures, normalizations and kernel integrals."""

from qasc.algebra import BigFloat
from qasc.jackson._checks import (
    gram_matrix,
    hermiticity_check,
    kadell_check,
    one_variable_orthogonality,
    orthogonality_suite,
    uv_inversion_check,
)
from qasc.jackson._integral_reps import (
    default_point,
    integral_representations,
    kernel_p_check,
    kernel_pair_u_check,
    kernel_pair_v_check,
    kernel_u_check,
    kernel_v_check,
    safe_scale,
)
from qasc.jackson._lattice import (
    Domain,
    default_truncation,
    jackson_1d,
    lattice_points,
)
from qasc.jackson._measure import (
    Family,
    Method,
    QMeasure,
    delta_k,
    exact_moment_u,
    inner_product,
    integrate,
    moments,
    q_measure,
)
from qasc.jackson._norms import (
    DEFAULT_SMALL_A,
    insertion_check,
    leading_lattice_term,
    norm0_check,
    norm0_closed,
    norm0_exact,
    norm_lambda_closed,
    norm_lambda_exact,
    norm_scaling_check,
    relative_tolerance,
    small_a_asymptotics,
    small_a_asymptotics_check,
    sun_norm,
    sun_norm_check,
)
from qasc.jackson._weights import (
    dashed_qpochhammer,
    weight_big_q_jacobi,
    weight_reduction_check,
    weight_u,
    weight_v,
)

__all__ = [
    "DEFAULT_SMALL_A",
    "BigFloat",
    "Domain",
    "Family",
    "Method",
    "QMeasure",
    "dashed_qpochhammer",
    "default_point",
    "default_truncation",
    "delta_k",
    "exact_moment_u",
    "gram_matrix",
    "hermiticity_check",
    "inner_product",
    "insertion_check",
    "integral_representations",
    "integrate",
    "jackson_1d",
    "kadell_check",
    "kernel_p_check",
    "kernel_pair_u_check",
    "kernel_pair_v_check",
    "kernel_u_check",
    "kernel_v_check",
    "lattice_points",
    "leading_lattice_term",
    "moments",
    "norm0_check",
    "norm0_closed",
    "norm0_exact",
    "norm_lambda_closed",
    "norm_lambda_exact",
    "norm_scaling_check",
    "one_variable_orthogonality",
    "orthogonality_suite",
    "q_measure",
    "relative_tolerance",
    "safe_scale",
    "small_a_asymptotics",
    "small_a_asymptotics_check",
    "sun_norm",
    "sun_norm_check",
    "uv_inversion_check",
    "weight_big_q_jacobi",
    "weight_reduction_check",
    "weight_u",
    "weight_v",
]
