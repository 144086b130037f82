"""Exact identities of the truncated kernels."""

from collections.abc import Sequence
from fractions import Fraction

from qasc.algebra import (
    ParamPoint,
    diagonal_product,
    power_sum,
    sample_point,
)
from qasc.kernels._kernel import kernel_coefficient, truncated_kernel
from qasc.operators import e_op
from qasc.partition import partitions_up_to, tdelta
from qasc.qseries import big_e_q_coefficients, e_q_coefficients
from qasc.utils import CheckReport, combine, exact_report


def _params(pt: ParamPoint, degmax: int) -> dict[str, str]:
    return {**pt.as_params(), "degmax": str(degmax)}


def inversion_relation_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """0F0(x; y; 1/q, 1/t) = 0psi0(x; t^(n-1) q y; q, t), term by term."""
    params = _params(pt, degmax)
    inverted = pt.inverted()
    scale = pt.t ** (pt.nvars - 1) * pt.q
    reports = [
        exact_report(
            "inversion",
            params,
            kernel_coefficient("F", kappa, inverted),
            kernel_coefficient("psi", kappa, pt) * scale**kappa.size,
            {"kappa": str(kappa)},
        )
        for kappa in partitions_up_to(degmax, pt.nvars)
    ]
    return combine("kernel-inversion", params, reports)


def kernel_specialization_checks(
    pt: ParamPoint, degmax: int, c: Fraction = Fraction(1, 2)
) -> CheckReport:
    """Both kernels at y = c t^delta against their product forms.

    0F0(x; c t^delta) = prod_i 1/(c x_i;q)_inf and
    0psi0(x; c t^delta) = prod_i (c x_i;q)_inf, as series through degmax.
    """
    n = pt.nvars
    params = {**_params(pt, degmax), "c": str(c)}
    y = tuple(c * v for v in tdelta(n, pt.t))
    e_coefs = [coef * c**m for m, coef in enumerate(e_q_coefficients(pt.q, degmax))]
    big_coefs = [
        (-c) ** m * coef
        for m, coef in enumerate(big_e_q_coefficients(pt.q, degmax))
    ]
    reports = [
        exact_report(
            "kernel-f-at-tdelta",
            params,
            truncated_kernel("F", pt, degmax).in_x(y),
            diagonal_product(e_coefs, n, degmax),
        ),
        exact_report(
            "kernel-psi-at-tdelta",
            params,
            truncated_kernel("psi", pt, degmax).in_x(y),
            diagonal_product(big_coefs, n, degmax),
        ),
    ]
    return combine("kernel-specialization", params, reports)


def lassalle_e0_check(
    pt: ParamPoint, degmax: int, x: Sequence[Fraction] | None = None
) -> CheckReport:
    """(1-q) E_0 in y of 0F0(x; y) equals p_1(x) 0F0(x; y).

    x is fixed at a rational point, so both sides are polynomials in y;
    they agree through y-degree degmax - 1.
    """
    n = pt.nvars
    point = sample_point(n) if x is None else tuple(x)
    params = _params(pt, degmax)
    kernel = truncated_kernel("F", pt, degmax).in_x(point)
    lhs = e_op(kernel, 0, pt).scale(1 - pt.q)
    rhs = kernel.scale(power_sum(1, n).evaluate(point))
    return exact_report(
        "kernel-e0",
        params,
        lhs.truncate(degmax - 1),
        rhs.truncate(degmax - 1),
        {"x": [str(v) for v in point]},
    )
