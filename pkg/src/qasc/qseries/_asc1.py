"""One-variable Al-Salam & Carlitz polynomials and their identities."""

from fractions import Fraction
from math import comb

import mpmath

from qasc.algebra import ParamPoint, as_fraction
from qasc.qseries._qexp import (
    big_e_q,
    big_e_q_coefficients,
    e_q,
    e_q_coefficients,
    rho_coefficients,
    rho_inverse_coefficients,
)
from qasc.qseries._qnumbers import qint, qpochhammer_exact
from qasc.qseries._qpoly1 import QPoly1
from qasc.utils import (
    CheckReport,
    QascValueError,
    combine,
    comparison_floor,
    exact_report,
    numeric_report,
    resolve_precision,
    tail_tolerance,
)


def _u_sequence(nmax: int, q: Fraction, a: Fraction) -> list[QPoly1]:
    if nmax < 0:
        raise QascValueError(f"Degree must be nonnegative, got {nmax}.")
    x = QPoly1.x()
    sequence = [QPoly1.constant(1)]
    previous = QPoly1()
    for m in range(nmax):
        current = sequence[-1]
        following = current * (x - (1 + a) * q**m)
        if m > 0:
            following = following + previous * (a * q ** (m - 1) * (1 - q**m))
        previous = current
        sequence.append(following)
    return sequence


def u1(n: int, pt: ParamPoint) -> QPoly1:
    """U_n^(a)(x;q) from the three-term recurrence.

    U_(m+1) = (x - (1+a) q^m) U_m + a q^(m-1) (1 - q^m) U_(m-1), U_0 = 1.
    """
    return _u_sequence(n, pt.q, pt.a)[n]


def v1(n: int, pt: ParamPoint) -> QPoly1:
    """V_n^(a)(x;q) = U_n^(a)(x;1/q)."""
    return _u_sequence(n, 1 / pt.q, pt.a)[n]


def u1_properties_check(pt: ParamPoint, nmax: int) -> CheckReport:
    """Exact check of the lowering, contiguity, recurrence and special values.

    The values at a = 0 are also compared with y^n (1/y;q)_n when a = 0.
    """
    q, a = pt.q, pt.a
    params = {**pt.as_params(), "nmax": str(nmax)}
    us = _u_sequence(nmax + 1, q, a)
    shifted = _u_sequence(nmax, q, a / q)
    x = QPoly1.x()
    reports = []
    for n in range(nmax + 1):
        tag = {"n": n}
        if n >= 1:
            reports.append(
                exact_report(
                    "q-derivative",
                    params,
                    us[n].q_derivative(q),
                    us[n - 1] * qint(n, q),
                    tag,
                )
            )
            rhs = us[n] - us[n - 1] * (a / q * (1 - q**n))
            reports.append(exact_report("a-shift", params, shifted[n], rhs, tag))
        rhs = us[n + 1] + us[n] * ((1 + a) * q**n)
        if n >= 1:
            rhs = rhs - us[n - 1] * (a * q ** (n - 1) * (1 - q**n))
        reports.append(
            exact_report("three-term-recurrence", params, x * us[n], rhs, tag)
        )
        sign = Fraction(-1) ** n
        reports.append(
            exact_report(
                "value-at-one",
                params,
                us[n].evaluate(1),
                q ** comb(n, 2) * (-a) ** n,
                tag,
            )
        )
        reports.append(
            exact_report(
                "value-at-a", params, us[n].evaluate(a), q ** comb(n, 2) * sign, tag
            )
        )
        if a == 0:
            product = QPoly1.constant(1)
            for i in range(n):
                product = product * (x - q**i)
            reports.append(exact_report("a-zero-product", params, us[n], product, tag))
    return combine("u1-properties", params, reports)


def gfu_coefficient(n: int, pt: ParamPoint) -> QPoly1:
    """(q;q)_n times the x^n coefficient of rho_a(x) e_q(xy), as a polynomial in y."""
    r = rho_coefficients(pt, n)
    e = e_q_coefficients(pt.q, n)
    coefficients = [r[n - j] * e[j] for j in range(n + 1)]
    return QPoly1(coefficients) * qpochhammer_exact(pt.q, pt.q, n)


def gfv_coefficient(n: int, pt: ParamPoint) -> QPoly1:
    """V_n(y) read off the expansion of E_q(-xy) / rho_a(x)."""
    q = pt.q
    s = rho_inverse_coefficients(pt, n)
    big = big_e_q_coefficients(q, n)
    coefficients = [s[n - j] * (-1) ** j * big[j] for j in range(n + 1)]
    factor = qpochhammer_exact(q, q, n) * (-1) ** n / q ** comb(n, 2)
    return QPoly1(coefficients) * factor


def generating_function_check(pt: ParamPoint, nmax: int) -> CheckReport:
    """Compare u1 and v1 with the coefficients of their generating functions."""
    params = {**pt.as_params(), "nmax": str(nmax)}
    reports = []
    for n in range(nmax + 1):
        reports.append(exact_report("gfu", params, gfu_coefficient(n, pt), u1(n, pt)))
        reports.append(exact_report("gfv", params, gfv_coefficient(n, pt), v1(n, pt)))
    return combine("generating-functions", params, reports)


def exponential_inversion_check(q: Fraction | int, degree: int) -> CheckReport:
    """Formal series check of E_(1/q)(-x) = e_q(qx) through x^degree."""
    q = as_fraction(q)
    params = {"q": str(q), "degree": str(degree)}
    big_inv = big_e_q_coefficients(1 / q, degree)
    small = e_q_coefficients(q, degree)
    reports = [
        exact_report(
            "exponential-inversion",
            params,
            (-1) ** n * big_inv[n],
            q**n * small[n],
            {"n": n},
        )
        for n in range(degree + 1)
    ]
    return combine("exponential-inversion", params, reports)


def exponential_product_check(
    x: Fraction | int, q: Fraction | int, precision: int | None = None
) -> CheckReport:
    """Numeric check of e_q(x) E_q(-x) = 1."""
    digits = resolve_precision(precision)
    x, q = as_fraction(x), as_fraction(q)
    params = {"x": str(x), "q": str(q), "precision": str(digits)}
    with mpmath.workdps(digits):
        product = e_q(x, q, digits) * big_e_q(-x, q, digits)
        return numeric_report(
            "e-E-product",
            params,
            product,
            mpmath.mpf(1),
            tol=tail_tolerance(digits) * 10**10,
            floor=comparison_floor(digits),
            tail_bound=product.error,
        )
