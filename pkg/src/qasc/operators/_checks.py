"""Exact operator identities checked on a basis of symmetric polynomials."""

from qasc.algebra import (
    MPoly,
    ParamPoint,
    diagonal_product,
    elementary,
    monomial_basis,
    power_sum,
)
from qasc.operators._eigen import one_variable_op
from qasc.operators._shift import a_sum, b_op, e_op, m1_tilde, shift_sum
from qasc.qseries import qint, rho_coefficients, u1
from qasc.utils import CheckReport, combine, exact_report


def _params(pt: ParamPoint, degmax: int) -> dict[str, str]:
    return {**pt.as_params(), "degmax": str(degmax)}


def commutator_checks(pt: ParamPoint, degmax: int) -> CheckReport:
    """[M~, p_1] and [[M~, p_1], p_1] against their shift-sum forms."""
    n = pt.nvars
    params = _params(pt, degmax)
    p1 = power_sum(1, n)
    factor = 1 / pt.q - 1

    def _bracket(f: MPoly) -> MPoly:
        return m1_tilde(p1 * f, pt) - p1 * m1_tilde(f, pt)

    reports = []
    for lam, f in monomial_basis(n, degmax):
        tag = {"basis": str(lam)}
        single = _bracket(f)
        reports.append(
            exact_report(
                "e0-commutator",
                params,
                single,
                shift_sum(f, 1, True, pt).scale(factor),
                tag,
            )
        )
        double = _bracket(p1 * f) - p1 * single
        reports.append(
            exact_report(
                "e0-double-commutator",
                params,
                double,
                shift_sum(f, 2, True, pt).scale(factor**2),
                tag,
            )
        )
    return combine("commutators", params, reports)


def b_operator_checks(pt: ParamPoint, degmax: int) -> CheckReport:
    """Properties of B and of the coefficient sums of A_i(t).

    Covers B 1 = 0, B = E_0 - (1+a) E_1 + a E_2, the action of B on the
    truncated product of rho_a(x_i), the relation
    E_2 = (t^(n-1) e_1 - [E_1, e_1]) / (1 - q), sum_i A_i = [n]_t and
    sum_i x_i A_i = t^(n-1) e_1.
    """
    n = pt.nvars
    q, t, a = pt.q, pt.t, pt.a
    params = _params(pt, degmax)
    e1 = elementary(1, n)
    one = MPoly.one(n)
    reports = [
        exact_report("B-constant", params, b_op(one, pt), MPoly.zero(n)),
        exact_report("A-sum", params, a_sum([one] * n, t), one.scale(qint(n, t))),
        exact_report(
            "xA-sum",
            params,
            a_sum([MPoly.variable(n, i) for i in range(n)], t),
            e1.scale(t ** (n - 1)),
        ),
    ]
    for lam, f in monomial_basis(n, degmax):
        tag = {"basis": str(lam)}
        split = e_op(f, 0, pt) - e_op(f, 1, pt).scale(1 + a) + e_op(f, 2, pt).scale(a)
        reports.append(exact_report("B-split", params, b_op(f, pt), split, tag))
        bracket = e_op(e1 * f, 1, pt) - e1 * e_op(f, 1, pt)
        rhs = (e1 * f).scale(t ** (n - 1) / (1 - q)) - bracket.scale(1 / (1 - q))
        reports.append(exact_report("E2-relation", params, e_op(f, 2, pt), rhs, tag))
    top = max(degmax, 1)
    product = diagonal_product(rho_coefficients(pt, top + 1), n, top + 1)
    lhs = b_op(product, pt).truncate(top)
    multiplier = e1.scale(a * t ** (n - 1) / (1 - q)) - one.scale(
        (1 + a) * qint(n, t) / (1 - q)
    )
    rhs = (multiplier * product).truncate(top)
    reports.append(exact_report("b-on-rho-product", params, lhs, rhs, {"degree": top}))
    return combine("B-operator", params, reports)


def one_variable_eigen_check(pt: ParamPoint, nmax: int) -> CheckReport:
    """(1 - (1+a) D + a D^2) tau^-1 U_m = q^-m U_m for m <= nmax."""
    params = {**pt.as_params(), "nmax": str(nmax)}
    reports = []
    for m in range(nmax + 1):
        u = u1(m, pt).to_mpoly()
        reports.append(
            exact_report(
                "one-variable-difference-equation",
                params,
                one_variable_op(u, pt),
                u.scale(pt.q ** (-m)),
                {"m": m},
            )
        )
    return combine("one-variable-eigen", params, reports)
