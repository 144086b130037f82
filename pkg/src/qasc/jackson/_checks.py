"""Orthogonality, hermiticity and the inter-family checks of the Jackson engine."""

from fractions import Fraction
from functools import lru_cache, partial
from math import comb, factorial

import mpmath
import pandas as pd

from qasc.algebra import BigFloat, MPoly, ParamPoint, monomial_basis, vandermonde
from qasc.asc import asc_u, asc_v
from qasc.jackson._lattice import jackson_1d
from qasc.jackson._measure import (
    QMeasure,
    delta_k,
    exact_moment_u,
    inner_product,
    integrate,
    q_measure,
)
from qasc.jackson._norms import norm_lambda_closed, relative_tolerance
from qasc.jackson._weights import weight_u, weight_v
from qasc.operators import apply_h_form1
from qasc.partition import Partition, partitions_up_to
from qasc.qseries import qfactorial, qpochhammer_exact, u1, v1
from qasc.utils import (
    CheckReport,
    combine,
    comparison_floor,
    numeric_report,
    resolve_precision,
)

OFF_DIAGONAL_TOL = mpmath.mpf("1e-15")


def _measure_params(meas: QMeasure) -> dict[str, str]:
    return {
        **meas.pt.as_params(),
        "family": meas.family,
        "N": str(meas.truncation),
        "precision": str(meas.precision),
    }


def one_variable_orthogonality(
    pt: ParamPoint, mmax: int, precision: int | None = None
) -> CheckReport:
    """The Gram matrices of U_m on [a, 1] and V_m on [1, oo) in one variable.

    <U_m, U_l> = (1-q) (-a)^m q^C(m,2) (q;q)_m delta_ml and
    <V_m, V_l> = (1-q) a^m q^(-m^2) (q;q)_m delta_ml.
    """
    digits = resolve_precision(precision)
    point = pt.replace(t=pt.q, nvars=1)
    params = {**point.as_params(), "mmax": str(mmax)}
    q, a = point.q, point.a
    tol, floor = relative_tolerance(digits), comparison_floor(digits)
    reports = []
    for family, basis, weight, domain in (
        ("U", u1, weight_u, "[a,1]"),
        ("V", v1, weight_v, "[1,inf)"),
    ):
        cached = lru_cache(maxsize=None)(partial(weight, pt=point, precision=digits))
        for m in range(mmax + 1):
            for ell in range(m + 1):
                pm, pl = basis(m, point), basis(ell, point)

                def integrand(x: Fraction, pm=pm, pl=pl, w=cached) -> BigFloat:
                    return w(x) * (pm.evaluate(x) * pl.evaluate(x))

                value = jackson_1d(integrand, point, domain, precision=digits)
                if m != ell:
                    expected = Fraction(0)
                elif family == "U":
                    expected = (1 - q) * (-a) ** m * q ** comb(m, 2)
                    expected *= qpochhammer_exact(q, q, m)
                else:
                    expected = (1 - q) * a**m * q ** (-m * m)
                    expected *= qpochhammer_exact(q, q, m)
                reports.append(
                    numeric_report(
                        f"orthogonality-1d-{family}",
                        params,
                        value,
                        expected,
                        tol,
                        floor,
                        tail_bound=value.error,
                        details={"m": m, "l": ell},
                    )
                )
    return combine("orthogonality-1d", params, reports)


def _basis(meas: QMeasure, nmax_deg: int) -> list[tuple[Partition, MPoly]]:
    build = asc_u if meas.family == "U" else asc_v
    return [
        (kappa, build(kappa, meas.pt).poly)
        for kappa in partitions_up_to(nmax_deg, meas.nvars)
    ]


def gram_matrix(nmax_deg: int, meas: QMeasure) -> pd.DataFrame:
    """<P_i | P_j> for the family's basis with |kappa| <= nmax_deg, as floats."""
    basis = _basis(meas, nmax_deg)
    labels = [str(kappa) for kappa, _ in basis]
    values = [[float(inner_product(f, g, meas)) for _, g in basis] for _, f in basis]
    return pd.DataFrame(values, index=labels, columns=labels)


def orthogonality_suite(nmax_deg: int, meas: QMeasure) -> CheckReport:
    """Orthogonality and norms of U_kappa (or V_kappa) under the measure.

    Off-diagonal entries must be below 1e-15 sqrt(|G_ii G_jj|); diagonal
    entries must match the closed-form N_kappa. The Gram matrix is stored
    in the report details.
    """
    params = {**_measure_params(meas), "degmax": str(nmax_deg)}
    basis = _basis(meas, nmax_deg)
    size = len(basis)
    gram: list[list[BigFloat | None]] = [[None] * size for _ in range(size)]
    for i, (_, f) in enumerate(basis):
        for j in range(i, size):
            gram[i][j] = gram[j][i] = inner_product(f, basis[j][1], meas)
    reports = []
    digits = meas.precision
    with mpmath.workdps(digits):
        for i, (kappa, _) in enumerate(basis):
            diagonal = gram[i][i]
            assert diagonal is not None
            reports.append(
                numeric_report(
                    "gram-diagonal",
                    params,
                    diagonal,
                    norm_lambda_closed(kappa, meas.family, meas.pt, digits),
                    relative_tolerance(digits),
                    comparison_floor(digits),
                    tail_bound=diagonal.error,
                    details={"kappa": str(kappa)},
                )
            )
        for i in range(size):
            for j in range(i + 1, size):
                entry, gi, gj = gram[i][j], gram[i][i], gram[j][j]
                assert entry is not None and gi is not None and gj is not None
                scale = mpmath.sqrt(abs(gi.value * gj.value))
                reports.append(
                    numeric_report(
                        "gram-off-diagonal",
                        params,
                        entry,
                        0,
                        mpmath.mpf(0),
                        OFF_DIAGONAL_TOL * scale,
                        tail_bound=entry.error,
                        details={"i": str(basis[i][0]), "j": str(basis[j][0])},
                    )
                )
        labels = [str(kappa) for kappa, _ in basis]
        table = pd.DataFrame(
            [[mpmath.nstr(g.value, 20) for g in row if g is not None] for row in gram],
            index=labels,
            columns=labels,
        )
    details = {"gram": table.to_dict(orient="index")}
    return combine(f"orthogonality-{meas.family}", params, reports, details)


def hermiticity_check(meas: QMeasure, degmax: int) -> CheckReport:
    """<H f | g> = <f | H g> over the monomial symmetric basis up to degmax.

    The V family uses H at (1/q, 1/t), whose eigenfunctions are V_kappa.
    """
    pt = meas.pt if meas.family == "U" else meas.pt.inverted()
    params = {**_measure_params(meas), "degmax": str(degmax)}
    basis = monomial_basis(meas.nvars, degmax)
    images = [apply_h_form1(f, pt) for _, f in basis]
    tol = relative_tolerance(meas.precision)
    reports = []
    for i, (lam, f) in enumerate(basis):
        for j in range(i, len(basis)):
            lhs = inner_product(images[i], basis[j][1], meas)
            rhs = inner_product(f, images[j], meas)
            reports.append(
                numeric_report(
                    "hermiticity",
                    params,
                    lhs,
                    rhs,
                    tol,
                    tol,
                    tail_bound=lhs.error + rhs.error,
                    details={"f": str(lam), "g": str(basis[j][0])},
                )
            )
    return combine(f"hermiticity-{meas.family}", params, reports)


def uv_inversion_check(
    pt: ParamPoint,
    p_exp: int,
    nterms: int | None = None,
    precision: int | None = None,
) -> CheckReport:
    """The U moments continued to 1/q equal the V lattice sums at q.

    With a = -q^p, for f in {1, x, x^2} the rational (1/(1-q)) int_a^1 f w_U
    d_qx, evaluated at base 1/q, is compared with (1/(1-q)) int_1^oo f w_V
    d_qx at base q, summed over `nterms` lattice points.
    """
    digits = resolve_precision(precision)
    point = pt.replace(a=-(pt.q**p_exp), t=pt.q, nvars=1)
    params = {**point.as_params(), "p": str(p_exp)}
    inverse = point.replace(q=1 / point.q, t=1 / point.q)
    reports = []
    for j in range(3):

        def integrand(x: Fraction, j: int = j) -> BigFloat:
            return weight_v(x, point, digits) * x**j

        value = jackson_1d(integrand, point, "[1,inf)", nterms, digits)
        with mpmath.workdps(digits):
            value = value / BigFloat.exact(1 - point.q)
        reports.append(
            numeric_report(
                "uv-inversion",
                params,
                value,
                exact_moment_u(j, inverse),
                relative_tolerance(digits),
                comparison_floor(digits),
                tail_bound=value.error,
                details={"f": f"x^{j}"},
            )
        )
    return combine("uv-inversion", params, reports)


def kadell_check(
    pt: ParamPoint, degmax: int, precision: int | None = None
) -> CheckReport:
    """int f prod(x_i - x_j)(x_i - q x_j) = [n]_q!/n! int f prod(x_i - x_j)^2.

    Both sides integrate against prod_l w_U(x_l) d_qx_l at t = q, for the
    monomial symmetric f up to degmax.
    """
    pt.require_t_equals_q()
    digits = resolve_precision(precision)
    meas = q_measure("U", pt, precision=digits)
    n = pt.nvars
    params = {**pt.as_params(), "degmax": str(degmax)}
    factor = qfactorial(n, pt.q) / factorial(n)
    squared = vandermonde(n) * vandermonde(n)
    skew = delta_k(n, 1, pt.q)
    reports = []
    with mpmath.workdps(digits):
        for lam, f in monomial_basis(n, degmax):
            lhs = integrate(f * skew, meas)
            rhs = integrate(f * squared, meas) * BigFloat.exact(factor)
            reports.append(
                numeric_report(
                    "kadell",
                    params,
                    lhs,
                    rhs,
                    relative_tolerance(digits),
                    comparison_floor(digits),
                    tail_bound=lhs.error + rhs.error,
                    details={"f": str(lam)},
                )
            )
    return combine("kadell", params, reports)
