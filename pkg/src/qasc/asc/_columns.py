"""Column partitions: U_(1^p) against the elementary symmetric functions.

Since e_r = P_(1^r), expansions here are keyed by column partitions and can
be turned into polynomials with the P-basis and U-basis helpers.
"""

from fractions import Fraction
from math import comb

from qasc.algebra import MPoly, ParamPoint, elementary
from qasc.asc._asc import asc_u
from qasc.asc._identities import u_expansion_to_mpoly
from qasc.macdonald import Expansion, expansion_to_mpoly
from qasc.operators import apply_h_form1, m1
from qasc.partition import Partition, eigenvalue, eigenvalue_tilde
from qasc.qseries import qint, tbinomial, u1, v1
from qasc.utils import CheckReport, QascValueError, combine, exact_report


def column(p: int) -> Partition:
    """The partition (1^p)."""
    return Partition([1] * p)


def _check_column(p: int, pt: ParamPoint) -> None:
    if not 0 <= p <= pt.nvars:
        raise QascValueError(f"p must satisfy 0 <= p <= n={pt.nvars}, got {p}.")


def f_sequence(m: int, pt: ParamPoint) -> list[Fraction]:
    """f_0, ..., f_m with f_i = -(1+a) f_(i-1) + a (t^(i-1) - 1) f_(i-2)."""
    a, t = pt.a, pt.t
    values = [Fraction(1), -(1 + a)]
    for i in range(2, m + 1):
        values.append(-(1 + a) * values[i - 1] + a * (t ** (i - 1) - 1) * values[i - 2])
    return values[: m + 1]


def f_tilde_sequence(m: int, pt: ParamPoint) -> list[Fraction]:
    """f~_0, ..., f~_m of the three-term relation dual to f_sequence.

    f~_i = (1+a) t^(i-1) f~_(i-1) + a t^(i-2) (1 - t^(i-1)) f~_(i-2).
    """
    a, t = pt.a, pt.t
    values = [Fraction(1), 1 + a]
    for i in range(2, m + 1):
        values.append(
            (1 + a) * t ** (i - 1) * values[i - 1]
            + a * t ** (i - 2) * (1 - t ** (i - 1)) * values[i - 2]
        )
    return values[: m + 1]


def u_column_in_e(p: int, pt: ParamPoint) -> Expansion:
    """U_(1^p) = sum_i f_i [n-p+i choose i]_t e_(p-i)."""
    _check_column(p, pt)
    n, t = pt.nvars, pt.t
    f = f_sequence(p, pt)
    return [(column(p - i), f[i] * tbinomial(n - p + i, i, t)) for i in range(p + 1)]


def e_in_u_columns(p: int, pt: ParamPoint) -> Expansion:
    """e_p = sum_i f~_i [n-p+i choose i]_t U_(1^(p-i))."""
    _check_column(p, pt)
    n, t = pt.nvars, pt.t
    f = f_tilde_sequence(p, pt)
    return [(column(p - i), f[i] * tbinomial(n - p + i, i, t)) for i in range(p + 1)]


def s_m(m: int, pt: ParamPoint) -> Fraction:
    """S_m = sum_i f~_(m-i) [m choose i]_t (-a)^i, which equals t^C(m,2)."""
    f = f_tilde_sequence(m, pt)
    return sum(
        (f[m - i] * tbinomial(m, i, pt.t) * (-pt.a) ** i for i in range(m + 1)),
        Fraction(0),
    )


Triple = tuple[Fraction, Fraction, Fraction]


def m1_on_column_coefficients(p: int, pt: ParamPoint) -> Triple:
    """gamma_1, gamma_2, gamma_3 with M_1 U_(1^p) = sum_k gamma_k U_(1^(p-k+1))."""
    _check_column(p, pt)
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    bracket = t ** (n - p) * qint(n + 1 - p, t)
    g1 = eigenvalue(column(p), pt)
    g2 = -(1 - q) * (1 + a) * bracket
    g3 = (1 - q) * (t - 1) * a * bracket * qint(n + 2 - p, t)
    return g1, g2, g3


def h_on_e_coefficients(p: int, pt: ParamPoint) -> Triple:
    """A_1, A_2, A_3 with H e_p = A_1 e_p + A_2 e_(p-1) + A_3 e_(p-2)."""
    _check_column(p, pt)
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    a1 = eigenvalue_tilde(column(p), pt)
    a2 = -(1 + a) * (1 / q - 1) * t ** (p - n) * qint(n + 1 - p, t)
    a3 = (
        a
        * (1 / q - 1)
        * (t - 1)
        * t ** (p - n - 1)
        * qint(n + 1 - p, t)
        * qint(n + 2 - p, t)
    )
    return a1, a2, a3


def expand_prod_in_u(n: int, pt: ParamPoint) -> Expansion:
    """prod_j (x_j - a) = sum_r t^C(n-r, 2) U_(1^r)."""
    if n != pt.nvars:
        pt = pt.replace(nvars=n)
    return [(column(r), pt.t ** comb(n - r, 2)) for r in range(n + 1)]


def _tb(m: int, r: int, t: Fraction) -> Fraction:
    # zero outside 0 <= r <= m
    return tbinomial(m, r, t) if 0 <= r <= m else Fraction(0)


def _three_terms(
    p: int, coefficients: tuple[Fraction, Fraction, Fraction]
) -> Expansion:
    return [
        (column(p - k), coef)
        for k, coef in enumerate(coefficients)
        if p - k >= 0 and coef
    ]


def column_partition_checks(pt: ParamPoint, mmax: int = 4) -> CheckReport:
    """Every expansion of U_(1^p) and e_p, plus the scalar identities behind them."""
    n, t, a = pt.nvars, pt.t, pt.a
    params = {**pt.as_params(), "mmax": str(mmax)}
    reports = []
    f = f_sequence(mmax, pt)
    f_tilde = f_tilde_sequence(mmax, pt)
    if t != 1:
        line = pt.replace(q=t)
        for i in range(mmax + 1):
            tag = {"i": i}
            v_value = t ** comb(i, 2) * v1(i, line).evaluate(0)
            u_value = (-1) ** i * u1(i, line).evaluate(0)
            reports.append(exact_report("f-sequence", params, f[i], v_value, tag))
            reports.append(
                exact_report("f-tilde-sequence", params, f_tilde[i], u_value, tag)
            )
    for m in range(1, mmax + 1):
        tag = {"m": m}
        value = s_m(m, pt)
        reports.append(exact_report("column-sum", params, value, t ** comb(m, 2), tag))
        previous = t ** (m - 1) * s_m(m - 1, pt)
        reports.append(exact_report("column-sum-step", params, value, previous, tag))
        for i in range(1, m + 1):
            tag = {"m": m, "i": i}
            lower, shifted = _tb(m - 1, i, t), _tb(m - 1, i - 1, t)
            gp1 = lower + t ** (m - i) * shifted
            reports.append(
                exact_report("t-binomial-pascal", params, _tb(m, i, t), gp1, tag)
            )
            gp2 = lower - (1 - t ** (m - i)) * shifted
            reports.append(
                exact_report("t-binomial-dual-pascal", params, t**i * lower, gp2, tag)
            )
    for p in range(n + 1):
        tag = {"p": p}
        u_p = asc_u(column(p), pt).poly
        lhs = expansion_to_mpoly(u_column_in_e(p, pt), pt)
        reports.append(exact_report("u-column-in-e", params, lhs, u_p, tag))
        reports.append(
            exact_report(
                "e-in-u-columns",
                params,
                u_expansion_to_mpoly(e_in_u_columns(p, pt), pt),
                elementary(p, n),
                tag,
            )
        )
        m1_terms = _three_terms(p, m1_on_column_coefficients(p, pt))
        m1_rhs = u_expansion_to_mpoly(m1_terms, pt)
        reports.append(
            exact_report("m1-on-u-column", params, m1(u_p, pt), m1_rhs, tag)
        )
        h_rhs = expansion_to_mpoly(_three_terms(p, h_on_e_coefficients(p, pt)), pt)
        reports.append(
            exact_report(
                "h-on-e", params, apply_h_form1(elementary(p, n), pt), h_rhs, tag
            )
        )
    product = MPoly.one(n)
    for j in range(n):
        product = product * (MPoly.variable(n, j) - a)
    reports.append(
        exact_report(
            "product-in-u-basis",
            params,
            u_expansion_to_mpoly(expand_prod_in_u(n, pt), pt),
            product,
        )
    )
    return combine("column-partitions", params, reports)
