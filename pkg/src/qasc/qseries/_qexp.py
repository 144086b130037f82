"""q-exponentials and the product rho_a(x) = (x;q)_inf (ax;q)_inf."""

from fractions import Fraction
from math import comb

import mpmath

from qasc.algebra import BigFloat, ParamPoint, as_fraction
from qasc.qseries._qnumbers import qpochhammer, qpochhammer_exact
from qasc.utils import resolve_precision


def e_q(x: Fraction | int, q: Fraction | int, precision: int | None = None) -> BigFloat:
    """e_q(x) = sum x^n / (q;q)_n = 1 / (x;q)_inf."""
    digits = resolve_precision(precision)
    with mpmath.workdps(digits):
        den = qpochhammer(x, q, precision=digits)
        return 1 / den


def big_e_q(
    x: Fraction | int, q: Fraction | int, precision: int | None = None
) -> BigFloat:
    """E_q(x) = sum q^C(n,2) x^n / (q;q)_n = (-x;q)_inf."""
    result = qpochhammer(-as_fraction(x), q, precision=precision)
    assert isinstance(result, BigFloat)
    return result


def e_q_coefficients(q: Fraction, degmax: int) -> list[Fraction]:
    """Coefficients 1 / (q;q)_n of e_q(x) up to x^degmax."""
    return [1 / qpochhammer_exact(q, q, n) for n in range(degmax + 1)]


def big_e_q_coefficients(q: Fraction, degmax: int) -> list[Fraction]:
    """Coefficients q^C(n,2) / (q;q)_n of E_q(x) up to x^degmax."""
    return [q ** comb(n, 2) / qpochhammer_exact(q, q, n) for n in range(degmax + 1)]


def rho_coefficients(pt: ParamPoint, degmax: int) -> list[Fraction]:
    """Taylor coefficients of rho_a(x) = E_q(-x) E_q(-ax) up to x^degmax."""
    q, a = pt.q, pt.a
    big = big_e_q_coefficients(q, degmax)
    return [
        sum(
            (
                (-1) ** m * big[j] * big[m - j] * a ** (m - j)
                for j in range(m + 1)
            ),
            Fraction(0),
        )
        for m in range(degmax + 1)
    ]


def rho_inverse_coefficients(pt: ParamPoint, degmax: int) -> list[Fraction]:
    """Taylor coefficients of 1 / rho_a(x) = e_q(x) e_q(ax) up to x^degmax."""
    q, a = pt.q, pt.a
    small = e_q_coefficients(q, degmax)
    return [
        sum((small[j] * small[m - j] * a ** (m - j) for j in range(m + 1)), Fraction(0))
        for m in range(degmax + 1)
    ]


def rho_value(
    x: Fraction | int, pt: ParamPoint, precision: int | None = None
) -> BigFloat:
    """Numeric rho_a(x) with its truncation error."""
    digits = resolve_precision(precision)
    x = as_fraction(x)
    with mpmath.workdps(digits):
        left = qpochhammer(x, pt.q, precision=digits)
        right = qpochhammer(pt.a * x, pt.q, precision=digits)
        return left * right
