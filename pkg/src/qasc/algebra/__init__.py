"""Exact polynomial arithmetic, parameter points and symmetric bases."""

from qasc.algebra._bigfloat import BigFloat
from qasc.algebra._mpoly import Exponent, MPoly
from qasc.algebra._param_point import ParamPoint
from qasc.algebra._rational import (
    Rational,
    as_fraction,
    format_rational,
    fraction_to_mpf,
    parse_rational,
    sample_point,
)
from qasc.algebra._symmetric import (
    determinant,
    diagonal_product,
    elementary,
    from_monomial_basis,
    monomial_basis,
    monomial_symmetric,
    permutation_sign,
    power_sum,
    schur,
    to_monomial_basis,
    vandermonde,
)

__all__ = [
    "BigFloat",
    "Exponent",
    "MPoly",
    "ParamPoint",
    "Rational",
    "as_fraction",
    "determinant",
    "diagonal_product",
    "elementary",
    "format_rational",
    "fraction_to_mpf",
    "from_monomial_basis",
    "monomial_basis",
    "monomial_symmetric",
    "parse_rational",
    "permutation_sign",
    "power_sum",
    "sample_point",
    "schur",
    "to_monomial_basis",
    "vandermonde",
]
