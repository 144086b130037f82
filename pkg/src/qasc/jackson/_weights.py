"""The weights w_U, w_V and the big q-Jacobi weight."""

from fractions import Fraction
from functools import lru_cache

import mpmath

from qasc.algebra import BigFloat, ParamPoint
from qasc.jackson._lattice import lattice_points
from qasc.qseries import qpochhammer, qpochhammer_exact
from qasc.utils import (
    CheckReport,
    ParameterError,
    combine,
    comparison_floor,
    numeric_report,
    resolve_precision,
)

Point = Fraction | BigFloat


def _check_base(pt: ParamPoint) -> None:
    if not 0 < pt.q < 1:
        raise ParameterError(f"Expected 0 < q < 1, got {pt}.")


def lattice_exponent(x: Fraction, q: Fraction) -> int | None:
    """Return m >= 0 with x = q^-m, or None."""
    if x <= 0:
        return None
    m = 0
    value = x
    while value > 1:
        value *= q
        m += 1
    return m if value == 1 else None


def dashed_qpochhammer(x: Point, q: Fraction, precision: int) -> BigFloat:
    """(x;q)_oo with the factor that vanishes at x = q^-m deleted.

    For x = q^-m this is (q^-m;q)_m (q;q)_oo; elsewhere it is the plain
    infinite product.
    """
    if isinstance(x, Fraction):
        m = lattice_exponent(x, q)
        if m is not None:
            finite = qpochhammer_exact(x, q, m)
            with mpmath.workdps(precision):
                return BigFloat.exact(finite) * qpochhammer(q, q, precision=precision)
    return qpochhammer(x, q, precision=precision)


@lru_cache(maxsize=64)
def _u_normalizer(q: Fraction, a: Fraction, precision: int) -> BigFloat:
    with mpmath.workdps(precision):
        return (
            qpochhammer(q, q, precision=precision)
            * qpochhammer(a, q, precision=precision)
            * qpochhammer(q / a, q, precision=precision)
        )


@lru_cache(maxsize=64)
def _v_numerator(q: Fraction, a: Fraction, precision: int) -> BigFloat:
    with mpmath.workdps(precision):
        return (
            qpochhammer(q, q, precision=precision)
            * qpochhammer(1 / a, q, precision=precision)
            * qpochhammer(q * a, q, precision=precision)
        )


@lru_cache(maxsize=4096)
def weight_u(x: Point, pt: ParamPoint, precision: int | None = None) -> BigFloat:
    """w_U(x) = (qx;q)_oo (qx/a;q)_oo / ((q;q)_oo (a;q)_oo (q/a;q)_oo).

    Raises:
        ParameterError: Unless a < 0 and 0 < q < 1.
    """
    _check_base(pt)
    pt.require_negative_a()
    digits = resolve_precision(precision)
    q, a = pt.q, pt.a
    with mpmath.workdps(digits):
        numerator = qpochhammer(q * x, q, precision=digits) * qpochhammer(
            q * x / a, q, precision=digits
        )
        return numerator / _u_normalizer(q, a, digits)


@lru_cache(maxsize=4096)
def weight_v(x: Point, pt: ParamPoint, precision: int | None = None) -> BigFloat:
    """w_V(x) = (q;q)_oo (1/a;q)_oo (qa;q)_oo / ((x;q)_oo (x/a;q)_oo).

    A factor of a denominator product that vanishes on the lattice q^-m is
    deleted, so w_V(q^-m) = (aq;q)_oo a^m q^(m(m+1)) / ((q;q)_m (aq;q)_m).
    """
    _check_base(pt)
    if pt.a == 0:
        raise ParameterError("w_V needs a != 0.")
    digits = resolve_precision(precision)
    q, a = pt.q, pt.a
    with mpmath.workdps(digits):
        denominator = dashed_qpochhammer(x, q, digits) * dashed_qpochhammer(
            x / a, q, digits
        )
        return _v_numerator(q, a, digits) / denominator


def weight_big_q_jacobi(
    x: Point,
    alpha: Fraction,
    beta: Fraction,
    c: Fraction,
    d: Fraction,
    pt: ParamPoint,
    precision: int | None = None,
) -> BigFloat:
    """(qx/c;q)_oo (-qx/d;q)_oo / ((q alpha x/c;q)_oo (-q beta x/d;q)_oo)."""
    _check_base(pt)
    digits = resolve_precision(precision)
    q = pt.q
    with mpmath.workdps(digits):
        numerator = qpochhammer(q * x / c, q, precision=digits) * qpochhammer(
            -q * x / d, q, precision=digits
        )
        denominator = qpochhammer(
            q * alpha * x / c, q, precision=digits
        ) * qpochhammer(-q * beta * x / d, q, precision=digits)
        return numerator / denominator


def weight_reduction_check(
    pt: ParamPoint, npoints: int = 6, precision: int | None = None
) -> CheckReport:
    """The big q-Jacobi weight at (0, 0, 1, -a) is w_U times its normalizer.

    Compared on the first `npoints` points of both branches of [a, 1].
    """
    digits = resolve_precision(precision)
    params = {**pt.as_params(), "npoints": str(npoints)}
    reports = []
    zero = Fraction(0)
    with mpmath.workdps(digits):
        normalizer = _u_normalizer(pt.q, pt.a, digits)
        for x, _ in lattice_points(pt, "[a,1]", npoints):
            big = weight_big_q_jacobi(x, zero, zero, Fraction(1), -pt.a, pt, digits)
            reports.append(
                numeric_report(
                    "weight-reduction",
                    params,
                    big / normalizer,
                    weight_u(x, pt, digits),
                    mpmath.mpf(10) ** (-(digits // 2)),
                    comparison_floor(digits),
                    details={"x": str(x)},
                )
            )
    return combine("big-q-jacobi-reduction", params, reports)
