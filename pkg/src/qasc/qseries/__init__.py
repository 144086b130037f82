"""One-variable q-series machinery and Al-Salam & Carlitz polynomials."""

from qasc.qseries._asc1 import (
    exponential_inversion_check,
    exponential_product_check,
    generating_function_check,
    gfu_coefficient,
    gfv_coefficient,
    u1,
    u1_properties_check,
    v1,
)
from qasc.qseries._qexp import (
    big_e_q,
    big_e_q_coefficients,
    e_q,
    e_q_coefficients,
    rho_coefficients,
    rho_inverse_coefficients,
    rho_value,
)
from qasc.qseries._qnumbers import (
    INFINITY,
    qfactorial,
    qint,
    qpochhammer,
    qpochhammer_exact,
    tbinomial,
)
from qasc.qseries._qpoly1 import QPoly1

__all__ = [
    "INFINITY",
    "QPoly1",
    "big_e_q",
    "big_e_q_coefficients",
    "e_q",
    "e_q_coefficients",
    "exponential_inversion_check",
    "exponential_product_check",
    "generating_function_check",
    "gfu_coefficient",
    "gfv_coefficient",
    "qfactorial",
    "qint",
    "qpochhammer",
    "qpochhammer_exact",
    "rho_coefficients",
    "rho_inverse_coefficients",
    "rho_value",
    "tbinomial",
    "u1",
    "u1_properties_check",
    "v1",
]
