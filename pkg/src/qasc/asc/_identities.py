"""Structural identities of U_lambda: Pieri, lowering, contiguity, special values."""

from fractions import Fraction

from qasc.algebra import MPoly, ParamPoint, diagonal_product, elementary, sample_point
from qasc.asc._asc import asc_u
from qasc.hecke import h_form2
from qasc.kernels import kernel_coefficient, truncated_kernel
from qasc.macdonald import (
    Expansion,
    e0_action_P,
    macdonald_P,
    to_macdonald_basis,
)
from qasc.operators import apply_h_form1, e_op
from qasc.partition import (
    Partition,
    binom_add,
    binom_remove,
    eigenvalue,
    eigenvalue_tilde,
    hook_products,
    nodes,
    partitions_up_to,
    principal_specialization,
    psi_prime,
    tdelta,
    vertical_strips,
)
from qasc.qseries import generating_function_check, rho_coefficients
from qasc.utils import CheckReport, ParameterError, combine, exact_report


def _params(lam: Partition, pt: ParamPoint) -> dict[str, str]:
    return {**pt.as_params(), "kappa": str(lam)}


def u_expansion_to_mpoly(expansion: Expansion, pt: ParamPoint) -> MPoly:
    """sum c_mu U_mu for an expansion in the U-basis."""
    result = MPoly.zero(pt.nvars)
    for mu, coef in expansion:
        result = result + asc_u(mu, pt).poly.scale(coef)
    return result


def pieri_u(lam: Partition, pt: ParamPoint) -> Expansion:
    """Coefficients of e_1 U_lambda in the U-basis.

    e_1 U_lambda = (1+a) e(lambda) U_lambda
        + (1-q) sum_i t^(i-1) (lambda^(i) over lambda) h'_lambda/h'_lambda^(i)
          U_lambda^(i)
        - a (1-q) sum_i q^(lambda_i - 1) t^(n-i) (lambda over lambda_(i))
          P_lambda(t^delta)/P_lambda_(i)(t^delta) U_lambda_(i).
    """
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    addable, removable = nodes(lam, n)
    h_lam = hook_products(lam, pt)[1]
    result: Expansion = [(lam, (1 + a) * eigenvalue(lam, pt))]
    for i in addable:
        up = lam.add_node(i)
        coef = (1 - q) * t ** (i - 1) * binom_add(lam, i, pt)
        result.append((up, coef * h_lam / hook_products(up, pt)[1]))
    top = principal_specialization(lam, pt)
    for i in removable:
        down = lam.remove_node(i)
        coef = -a * (1 - q) * q ** (lam.part(i) - 1) * t ** (n - i)
        coef *= binom_remove(lam, i, pt) * top / principal_specialization(down, pt)
        result.append((down, coef))
    return result


def e0_u(lam: Partition, pt: ParamPoint) -> Expansion:
    """E_0 U_lambda in the U-basis; the coefficients are those of E_0 P_lambda."""
    return e0_action_P(lam, pt)


def a_contiguity_u(lam: Partition, pt: ParamPoint) -> Expansion:
    """U_lambda^(a/q) in the basis U_mu^(a), summed over vertical strips."""
    f_lam = kernel_coefficient("F", lam, pt)
    result: Expansion = []
    for r in range(min(lam.length, pt.nvars) + 1):
        weight = (-pt.a / pt.q) ** r
        for mu in vertical_strips(lam, r, pt.nvars):
            ratio = kernel_coefficient("F", mu, pt) / f_lam
            result.append((mu, weight * psi_prime(lam, mu, pt) * ratio))
    return result


def special_values_u(lam: Partition, pt: ParamPoint) -> tuple[Fraction, Fraction]:
    """U_lambda evaluated at t^delta and at a t^delta."""
    u = asc_u(lam, pt).poly
    point = tdelta(pt.nvars, pt.t)
    return u.evaluate(point), u.evaluate([pt.a * v for v in point])


def special_values_closed(
    lam: Partition, pt: ParamPoint
) -> tuple[Fraction, Fraction]:
    """Closed forms of the values at t^delta and a t^delta.

    They are (-a)^|l| q^b(l') t^-b(l) P_l(t^delta) and the same with -a
    replaced by -1.
    """
    base = (
        pt.q ** lam.conjugate().b()
        * pt.t ** (-lam.b())
        * principal_specialization(lam, pt)
    )
    return (-pt.a) ** lam.size * base, (-1) ** lam.size * base


def pieri_u_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """e_1 U_lambda against the U-basis expansion of pieri_u."""
    lhs = elementary(1, pt.nvars) * asc_u(lam, pt).poly
    rhs = u_expansion_to_mpoly(pieri_u(lam, pt), pt)
    return exact_report("pieri-u", _params(lam, pt), lhs, rhs)


def e0_u_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """E_0 U_lambda applied directly against e0_u."""
    lhs = e_op(asc_u(lam, pt).poly, 0, pt)
    rhs = u_expansion_to_mpoly(e0_u(lam, pt), pt)
    return exact_report("e0-lowering", _params(lam, pt), lhs, rhs)


def a_contiguity_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """U_lambda built at a/q against its vertical-strip expansion at a."""
    lhs = asc_u(lam, pt.replace(a=pt.a / pt.q)).poly
    rhs = u_expansion_to_mpoly(a_contiguity_u(lam, pt), pt)
    return exact_report("a-contiguity", _params(lam, pt), lhs, rhs)


def special_values_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """Both special values of U_lambda against their closed forms."""
    params = _params(lam, pt)
    values = special_values_u(lam, pt)
    closed = special_values_closed(lam, pt)
    return combine(
        "special-values",
        params,
        [
            exact_report("tdelta", params, values[0], closed[0]),
            exact_report("a-tdelta", params, values[1], closed[1]),
        ],
    )


def shifted_vanishing_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """U^(0)_lambda at y_i = q^mu_i t^(n-i), for all |mu| <= |lambda|.

    The value vanishes for mu != lambda and is nonzero at mu = lambda.
    """
    if pt.a != 0:
        raise ParameterError(f"The vanishing property needs a = 0, got {pt}.")
    n = pt.nvars
    params = _params(lam, pt)
    u = asc_u(lam, pt).poly
    reports = []
    for mu in partitions_up_to(lam.size, n):
        point = [pt.q**m * pt.t ** (n - i) for i, m in enumerate(mu.padded(n), 1)]
        value = u.evaluate(point)
        if mu == lam:
            reports.append(
                exact_report("nonvanishing", params, value != 0, True, {"mu": str(mu)})
            )
        else:
            reports.append(
                exact_report("vanishing", params, value, Fraction(0), {"mu": str(mu)})
            )
    return combine("shifted-vanishing", params, reports)


def eigen_equation_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """Both forms of H map U_lambda to e~(lambda) U_lambda."""
    params = _params(lam, pt)
    u = asc_u(lam, pt).poly
    expected = u.scale(eigenvalue_tilde(lam, pt))
    reports = [
        exact_report("form1", params, apply_h_form1(u, pt), expected),
        exact_report("form2", params, h_form2(u, pt), expected),
    ]
    return combine("eigen-equation", params, reports)


def leading_term_check(lam: Partition, pt: ParamPoint) -> CheckReport:
    """U_lambda = P_lambda + terms of strictly lower degree."""
    expansion = to_macdonald_basis(asc_u(lam, pt).poly, pt)
    top = {mu: c for mu, c in expansion.items() if mu.size >= lam.size}
    return exact_report("leading-term", _params(lam, pt), top, {lam: Fraction(1)})


def u_generating_function_check(
    pt: ParamPoint, degmax: int, y: tuple[Fraction, ...] | None = None
) -> CheckReport:
    """prod_i rho_a(x_i) 0F0(x; y) = sum_k f_k U_k(y) P_k(x) through x-degree degmax.

    y is a fixed rational point; the one-variable generating functions are
    checked alongside.
    """
    n = pt.nvars
    point = sample_point(n, shift=1) if y is None else y
    params = {**pt.as_params(), "degmax": str(degmax)}
    rho = diagonal_product(rho_coefficients(pt, degmax), n, degmax)
    lhs = rho.mul_truncated(truncated_kernel("F", pt, degmax).in_x(point), degmax)
    rhs = MPoly.zero(n)
    for kappa in partitions_up_to(degmax, n):
        value = asc_u(kappa, pt).poly.evaluate(point)
        weight = kernel_coefficient("F", kappa, pt) * value
        rhs = rhs + macdonald_P(kappa, pt).scale(weight)
    reports = [
        exact_report(
            "u-generating-function", params, lhs, rhs, {"y": [str(v) for v in point]}
        ),
        generating_function_check(pt, degmax),
    ]
    return combine("generating-function-u", params, reports)
