"""Affine Hecke operators, q-Dunkl operators and the Dunkl pairing."""

from qasc.hecke._affine import (
    Letter,
    apply_word,
    clear_dunkl_cache,
    dunkl_alternative,
    dunkl_d,
    dunkl_tilde,
    omega_op,
    t_op,
    tij_inverse,
    y_op,
)
from qasc.hecke._checks import (
    dunkl_pairing_check,
    dunkl_sum_check,
    e0_commutator_checks,
    form2_check,
    hecke_relation_checks,
    kernel_eigen_check,
    pairing_binomial_check,
    partial_m1_tilde_check,
)
from qasc.hecke._forms import h_form2, m1tilde_partial, m1tilde_via_y
from qasc.hecke._pairing import (
    apply_dunkl_polynomial,
    binomial_from_pairing,
    check_dunkl_commutation,
    dunkl_pairing,
    pairing_norm,
)

__all__ = [
    "Letter",
    "apply_dunkl_polynomial",
    "apply_word",
    "binomial_from_pairing",
    "check_dunkl_commutation",
    "clear_dunkl_cache",
    "dunkl_alternative",
    "dunkl_d",
    "dunkl_pairing",
    "dunkl_pairing_check",
    "dunkl_sum_check",
    "dunkl_tilde",
    "e0_commutator_checks",
    "form2_check",
    "h_form2",
    "hecke_relation_checks",
    "kernel_eigen_check",
    "m1tilde_partial",
    "m1tilde_via_y",
    "omega_op",
    "pairing_binomial_check",
    "pairing_norm",
    "partial_m1_tilde_check",
    "t_op",
    "tij_inverse",
    "y_op",
]
