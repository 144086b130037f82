"""The Schur line t = q: determinant formula and the Hermite limit trend."""

from collections.abc import Sequence
from fractions import Fraction

import mpmath
import numpy as np
import pandas as pd
from numpy.polynomial import hermite

from qasc.algebra import MPoly, ParamPoint, determinant, vandermonde
from qasc.asc._asc import RouteName, asc_u
from qasc.partition import Partition
from qasc.qseries import u1
from qasc.utils import (
    CheckReport,
    QascValueError,
    combine,
    exact_report,
    qasc_logger,
    resolve_precision,
)

DEFAULT_TREND_Q = (Fraction(9, 10), Fraction(99, 100), Fraction(999, 1000))


def det_formula(kappa: Partition, pt: ParamPoint) -> MPoly:
    """det[U_(kappa_i+n-i)(x_j)] / prod_(i<j)(x_i - x_j) at t = q.

    Raises:
        ParameterError: If t != q.
        NonDivisibilityError: If the division leaves a remainder.
    """
    pt.require_t_equals_q()
    n = pt.nvars
    if kappa.length > n:
        raise QascValueError(f"Partition {kappa} is longer than n={n}.")
    rows = [k + n - i for i, k in enumerate(kappa.padded(n), start=1)]
    matrix = [[u1(m, pt).to_mpoly(n, j) for j in range(n)] for m in rows]
    return determinant(matrix).exact_divide(vandermonde(n))


def det_formula_check(kappa: Partition, pt: ParamPoint) -> CheckReport:
    """The determinant formula against the eigen route."""
    params = {**pt.as_params(), "kappa": str(kappa)}
    return exact_report(
        "ratio", params, det_formula(kappa, pt), asc_u(kappa, pt, "eigen").poly
    )


def _check_point(x: Sequence[Fraction]) -> None:
    if len(set(x)) != len(x):
        raise QascValueError(f"Coordinates must be distinct, got {list(x)}.")


def hermite_reference(kappa: Partition, x: Sequence[Fraction]) -> float:
    """The q -> 1 limit of (1-q)^(-|k|/2) U_k((1-q)^(1/2) x; q, q) at a = -1.

    It is det[2^(-m_i/2) H_(m_i)(x_j / sqrt 2)] / prod_(i<j)(x_i - x_j) with
    m_i = kappa_i + n - i and H_m the classical Hermite polynomials.
    """
    _check_point(x)
    n = len(x)
    if kappa.length > n:
        raise QascValueError(f"Partition {kappa} is longer than n={n}.")
    points = np.array([float(v) for v in x])
    rows = [k + n - i for i, k in enumerate(kappa.padded(n), start=1)]
    matrix = np.empty((n, n))
    for i, m in enumerate(rows):
        unit = np.zeros(m + 1)
        unit[m] = 1.0
        matrix[i] = 2.0 ** (-m / 2) * hermite.hermval(points / np.sqrt(2.0), unit)
    vandermonde_value = np.prod(
        [points[i] - points[j] for i in range(n) for j in range(i + 1, n)]
    )
    return float(np.linalg.det(matrix) / vandermonde_value)


def hermite_value(
    kappa: Partition,
    x: Sequence[Fraction],
    q: Fraction,
    route: RouteName = "eigen",
    precision: int | None = None,
) -> mpmath.mpf:
    """(1-q)^(-|kappa|/2) U_kappa^(-1)((1-q)^(1/2) x; q, q)."""
    pt = ParamPoint(q=q, t=q, a=-1, nvars=len(x))
    u = asc_u(kappa, pt, route).poly
    with mpmath.workdps(resolve_precision(precision)):
        scale = mpmath.sqrt(1 - mpmath.mpf(q.numerator) / q.denominator)
        point = [scale * mpmath.mpf(v.numerator) / v.denominator for v in x]
        return +(u.evaluate_numeric(point) / scale**kappa.size)


def hermite_trend(
    kappa: Partition,
    x: Sequence[Fraction],
    q_values: Sequence[Fraction] = DEFAULT_TREND_Q,
    route: RouteName = "eigen",
) -> pd.DataFrame:
    """Distance of the rescaled U_kappa to its Hermite limit, one row per q."""
    x = [Fraction(v) for v in x]
    reference = hermite_reference(kappa, x)
    records = []
    for q in q_values:
        value = float(hermite_value(kappa, x, Fraction(q), route))
        records.append(
            {
                "q": float(q),
                "value": value,
                "reference": reference,
                "abs_err": abs(value - reference),
            }
        )
        qasc_logger.debug(f"Hermite trend {kappa} at q={q}: {records[-1]}.")
    return pd.DataFrame.from_records(records)


def hermite_trend_check(
    kappa: Partition,
    x: Sequence[Fraction],
    q_values: Sequence[Fraction] = DEFAULT_TREND_Q,
) -> CheckReport:
    """The error to the Hermite limit decreases strictly along q_values."""
    table = hermite_trend(kappa, x, q_values)
    errors = table["abs_err"].to_numpy()
    params = {"kappa": str(kappa), "x": ",".join(str(v) for v in x)}
    reports = [
        exact_report(
            "hermite-decrease",
            params,
            bool(errors[i + 1] < errors[i]),
            True,
            {"q": str(q_values[i + 1])},
        )
        for i in range(len(errors) - 1)
    ]
    details = {"table": table.astype(str).to_dict(orient="records")}
    return combine("hermite-trend", params, reports, details)
