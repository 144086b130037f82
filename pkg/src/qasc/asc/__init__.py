"""The multivariable Al-Salam & Carlitz polynomials U_kappa^(a) and V_kappa^(a)."""

from qasc.asc._asc import (
    AscPoly,
    Family,
    RouteName,
    asc_u,
    asc_u_eigen,
    asc_u_expop,
    asc_u_genfun,
    asc_v,
    asc_v_expop,
    route_agreement,
    to_asc_basis,
)
from qasc.asc._columns import (
    column,
    column_partition_checks,
    e_in_u_columns,
    expand_prod_in_u,
    f_sequence,
    f_tilde_sequence,
    h_on_e_coefficients,
    m1_on_column_coefficients,
    s_m,
    u_column_in_e,
)
from qasc.asc._determinant import (
    DEFAULT_TREND_Q,
    det_formula,
    det_formula_check,
    hermite_reference,
    hermite_trend,
    hermite_trend_check,
    hermite_value,
)
from qasc.asc._identities import (
    a_contiguity_check,
    a_contiguity_u,
    e0_u,
    e0_u_check,
    eigen_equation_check,
    leading_term_check,
    pieri_u,
    pieri_u_check,
    shifted_vanishing_check,
    special_values_check,
    special_values_closed,
    special_values_u,
    u_expansion_to_mpoly,
    u_generating_function_check,
)
from qasc.asc._routes import ImplementedRoutes, RouteFn, clear_route_caches

__all__ = [
    "DEFAULT_TREND_Q",
    "AscPoly",
    "Family",
    "ImplementedRoutes",
    "RouteFn",
    "RouteName",
    "a_contiguity_check",
    "a_contiguity_u",
    "asc_u",
    "asc_u_eigen",
    "asc_u_expop",
    "asc_u_genfun",
    "asc_v",
    "asc_v_expop",
    "clear_route_caches",
    "column",
    "column_partition_checks",
    "det_formula",
    "det_formula_check",
    "e0_u",
    "e0_u_check",
    "e_in_u_columns",
    "eigen_equation_check",
    "expand_prod_in_u",
    "f_sequence",
    "f_tilde_sequence",
    "h_on_e_coefficients",
    "hermite_reference",
    "hermite_trend",
    "hermite_trend_check",
    "hermite_value",
    "leading_term_check",
    "m1_on_column_coefficients",
    "pieri_u",
    "pieri_u_check",
    "route_agreement",
    "s_m",
    "shifted_vanishing_check",
    "special_values_check",
    "special_values_closed",
    "special_values_u",
    "to_asc_basis",
    "u_column_in_e",
    "u_expansion_to_mpoly",
    "u_generating_function_check",
]
