"""Closed-form normalizations and the checks built on them."""

from collections.abc import Sequence
from fractions import Fraction
from math import comb

import mpmath
import pandas as pd

from qasc.algebra import BigFloat, MPoly, ParamPoint, fraction_to_mpf
from qasc.jackson._measure import Family, delta_k, inner_product, q_measure
from qasc.jackson._weights import weight_u
from qasc.partition import (
    Partition,
    hook_products,
    partitions_up_to,
    principal_specialization,
    tdelta,
)
from qasc.qseries import qfactorial, qpochhammer_exact
from qasc.utils import (
    CheckReport,
    QascValueError,
    combine,
    comparison_floor,
    exact_report,
    numeric_report,
    qasc_logger,
    resolve_precision,
)

DEFAULT_SMALL_A = (Fraction(-1, 100), Fraction(-1, 1000), Fraction(-1, 10000))


def relative_tolerance(precision: int) -> mpmath.mpf:
    """10^-max(12, precision/2), the default of the relative comparisons."""
    return mpmath.mpf(10) ** (-max(12, precision // 2))


def _pochhammer_ratio(pt: ParamPoint, k: int) -> Fraction:
    # prod_l (q;q)_(kl) / (q;q)_k
    q = pt.q
    value = Fraction(1)
    for ell in range(1, pt.nvars + 1):
        value *= qpochhammer_exact(q, q, k * ell) / qpochhammer_exact(q, q, k)
    return value


def norm0_exact(family: Family, pt: ParamPoint) -> Fraction:
    """N_0 = <1 | 1> as a rational number.

    U: (1-q)^n (-a)^(k C(n,2)) t^(k C(n,3) - (k-1) C(n,2)/2) prod_l (q;q)_kl/(q;q)_k.
    V: (1-q)^n a^(k C(n,2)) t^(-2k C(n,3) - k C(n,2)) prod_l (q;q)_kl/(q;q)_k.
    """
    k = pt.require_k()
    n, q, a = pt.nvars, pt.q, pt.a
    pairs, triples = comb(n, 2), comb(n, 3)
    base = (1 - q) ** n * _pochhammer_ratio(pt, k)
    if family == "U":
        # t^(-(k-1)C(n,2)/2) = q^(-k(k-1)C(n,2)/2), an integer power
        exponent = k * k * triples - k * (k - 1) * pairs // 2
        return base * (-a) ** (k * pairs) * q**exponent
    if family == "V":
        exponent = -2 * k * k * triples - k * k * pairs
        return base * a ** (k * pairs) * q**exponent
    raise QascValueError(f"Unknown family {family!r}, expected 'U' or 'V'.")


def norm0_closed(
    family: Family, pt: ParamPoint, precision: int | None = None
) -> BigFloat:
    """N_0 of the family, rounded to `precision` digits."""
    with mpmath.workdps(resolve_precision(precision)):
        return BigFloat.exact(norm0_exact(family, pt))


def norm_lambda_exact(lam: Partition, family: Family, pt: ParamPoint) -> Fraction:
    """N_lambda = <U_lambda | U_lambda> (or the V analogue) as a rational.

    U: (-a t^(n-1))^|l| q^b(l') t^(-2b(l)) h'_l P_l(t^delta) N_0.
    V: (a q^-1 t^(-2(n-1)))^|l| q^(-2b(l')) t^b(l) h'_l P_l(t^delta) N_0.
    """
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    common = hook_products(lam, pt)[1] * principal_specialization(lam, pt)
    common *= norm0_exact(family, pt)
    b, b_conj = lam.b(), lam.conjugate().b()
    if family == "U":
        return (-a * t ** (n - 1)) ** lam.size * q**b_conj * t ** (-2 * b) * common
    scale = (a / q * t ** (-2 * (n - 1))) ** lam.size
    return scale * q ** (-2 * b_conj) * t**b * common


def norm_lambda_closed(
    lam: Partition, family: Family, pt: ParamPoint, precision: int | None = None
) -> BigFloat:
    """N_lambda rounded to `precision` digits."""
    with mpmath.workdps(resolve_precision(precision)):
        return BigFloat.exact(norm_lambda_exact(lam, family, pt))


def sun_norm(kappa: Partition, pt: ParamPoint) -> Fraction:
    """The t = q normalization from the determinant structure.

    [n]_q! (1-q)^n (-a)^(|k| + C(n,2)) q^(sum C(m_i, 2)) prod_i (q;q)_(m_i)
    with m_i = kappa_i + n - i.
    """
    pt.require_t_equals_q()
    n, q, a = pt.nvars, pt.q, pt.a
    rows = [k + n - i for i, k in enumerate(kappa.padded(n), start=1)]
    value = qfactorial(n, q) * (1 - q) ** n * (-a) ** (kappa.size + comb(n, 2))
    for m in rows:
        value *= q ** comb(m, 2) * qpochhammer_exact(q, q, m)
    return value


def sun_norm_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """sun_norm against N_kappa of the U family for |kappa| <= degmax."""
    params = {**pt.as_params(), "degmax": str(degmax)}
    reports = [
        exact_report(
            "sun-norm",
            params,
            sun_norm(kappa, pt),
            norm_lambda_exact(kappa, "U", pt),
            {"kappa": str(kappa)},
        )
        for kappa in partitions_up_to(degmax, pt.nvars)
    ]
    return combine("sun-norm", params, reports)


def _product_minus_a(pt: ParamPoint) -> MPoly:
    n = pt.nvars
    product = MPoly.one(n)
    for j in range(n):
        product = product * (MPoly.variable(n, j) - pt.a)
    return product


def norm0_check(
    pt: ParamPoint, family: Family = "U", precision: int | None = None
) -> CheckReport:
    """<1 | 1> by lattice summation against the closed form."""
    digits = resolve_precision(precision)
    meas = q_measure(family, pt, precision=digits)
    one = MPoly.one(pt.nvars)
    value = inner_product(one, one, meas)
    return numeric_report(
        f"norm0-{family}",
        pt.as_params(),
        value,
        norm0_closed(family, pt, digits),
        relative_tolerance(digits),
        comparison_floor(digits),
        tail_bound=value.error,
    )


def norm_scaling_check(pt: ParamPoint, precision: int | None = None) -> CheckReport:
    """N_0(aq) = t^C(n,2) N_0(a), in closed form and by summation."""
    digits = resolve_precision(precision)
    params = pt.as_params()
    shifted = pt.replace(a=pt.a * pt.q)
    factor = pt.t ** comb(pt.nvars, 2)
    one = MPoly.one(pt.nvars)
    lhs = inner_product(one, one, q_measure("U", shifted, precision=digits))
    rhs = inner_product(one, one, q_measure("U", pt, precision=digits))
    with mpmath.workdps(digits):
        scaled = rhs * BigFloat.exact(factor)
    reports = [
        exact_report(
            "scaling-closed",
            params,
            norm0_exact("U", shifted),
            factor * norm0_exact("U", pt),
        ),
        numeric_report(
            "scaling-sum",
            params,
            lhs,
            scaled,
            relative_tolerance(digits),
            comparison_floor(digits),
            tail_bound=lhs.error + scaled.error,
        ),
    ]
    return combine("norm-scaling", params, reports)


def insertion_check(pt: ParamPoint, precision: int | None = None) -> CheckReport:
    """<prod_j (x_j - a) | 1> at a equals N_0 at aq."""
    digits = resolve_precision(precision)
    meas = q_measure("U", pt, precision=digits)
    value = inner_product(_product_minus_a(pt), MPoly.one(pt.nvars), meas)
    return numeric_report(
        "insertion",
        pt.as_params(),
        value,
        norm0_closed("U", pt.replace(a=pt.a * pt.q), digits),
        relative_tolerance(digits),
        comparison_floor(digits),
        tail_bound=value.error,
    )


def leading_lattice_term(pt: ParamPoint, precision: int | None = None) -> BigFloat:
    """The lattice term of <1 | 1>_U at x = t^delta.

    (1-q)^n t^C(n,2) prod_j w_U(t^(j-1)) Delta_q^(k)(t^delta), which
    dominates the sum as a -> 0-.
    """
    digits = resolve_precision(precision)
    k, n = pt.require_k(), pt.nvars
    point = tdelta(n, pt.t)
    with mpmath.workdps(digits):
        value = BigFloat.exact(
            (1 - pt.q) ** n * pt.t ** comb(n, 2) * delta_k(n, k, pt.q).evaluate(point)
        )
        for x in point:
            value = value * weight_u(x, pt, digits)
        return value


def small_a_asymptotics(
    pt: ParamPoint,
    a_values: Sequence[Fraction] = DEFAULT_SMALL_A,
    precision: int | None = None,
) -> pd.DataFrame:
    """One row per a: the leading lattice term, N_0 and their relative gap.

    The column `limit` holds a^(-k C(n,2)) N_0(a), constant in a.
    """
    digits = resolve_precision(precision)
    k = pt.require_k()
    exponent = k * comb(pt.nvars, 2)
    records = []
    with mpmath.workdps(digits):
        for a in a_values:
            point = pt.replace(a=a)
            exact = norm0_exact("U", point)
            leading = leading_lattice_term(point, digits).value
            norm = fraction_to_mpf(exact)
            records.append(
                {
                    "a": str(Fraction(a)),
                    "leading": float(leading),
                    "norm0": float(norm),
                    "limit": float(fraction_to_mpf(exact / Fraction(a) ** exponent)),
                    "rel_err": float(abs(leading / norm - 1)),
                }
            )
            qasc_logger.debug(f"Small a asymptotics at a={a}: {records[-1]}.")
    return pd.DataFrame.from_records(records)


def small_a_asymptotics_check(
    pt: ParamPoint,
    a_values: Sequence[Fraction] = DEFAULT_SMALL_A,
    precision: int | None = None,
) -> CheckReport:
    """The leading term approaches N_0 strictly along a_values."""
    table = small_a_asymptotics(pt, a_values, precision)
    errors = table["rel_err"].to_numpy()
    params = {k: v for k, v in pt.as_params().items() if k != "a"}
    reports = [
        exact_report(
            "small-a-decrease",
            params,
            bool(errors[i + 1] < errors[i]),
            True,
            {"a": str(a_values[i + 1])},
        )
        for i in range(len(errors) - 1)
    ]
    details = {"table": table.astype(str).to_dict(orient="records")}
    return combine("small-a-asymptotics", params, reports, details)
