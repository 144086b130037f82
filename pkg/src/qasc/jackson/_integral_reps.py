"""Integrals of the hypergeometric kernels against the U and V measures.

The U side integrates truncated kernels against prod w_U over [a,1]^n by
moments; the truncation error is bounded with the kernel majorants on the
box |x_l| <= max(1, |a|). The V side is summed point by point over
[1,oo) in one variable, each lattice point carrying its own majorant tail.
"""

from collections.abc import Callable, Sequence
from fractions import Fraction
from math import comb
from typing import Literal

import mpmath

from qasc.algebra import BigFloat, MPoly, ParamPoint, fraction_to_mpf
from qasc.asc import asc_u, asc_v
from qasc.jackson._lattice import jackson_1d
from qasc.jackson._measure import delta_k, integrate, q_measure
from qasc.jackson._norms import norm0_exact
from qasc.jackson._weights import weight_v
from qasc.kernels import f00, kernel_tail_bound, psi00, truncated_kernel
from qasc.macdonald import macdonald_P
from qasc.partition import Partition, partitions_up_to
from qasc.qseries import rho_value
from qasc.utils import (
    CheckReport,
    ParameterError,
    combine,
    comparison_floor,
    numeric_report,
    resolve_precision,
)

DEFAULT_TOL = mpmath.mpf("1e-6")
DEFAULT_DEGMAX = 16

Point = Sequence[Fraction]


def default_point(n: int, scale: int = 10) -> tuple[Fraction, ...]:
    """The small point (1/scale, 1/(2 scale), ..., 1/(n scale))."""
    return tuple(Fraction(1, scale * (i + 1)) for i in range(n))


def _params(pt: ParamPoint, degmax: int, **points: Point) -> dict[str, str]:
    params = {**pt.as_params(), "degmax": str(degmax)}
    for name, value in points.items():
        params[name] = ",".join(str(v) for v in value)
    return params


def _radius(pt: ParamPoint) -> mpmath.mpf:
    return max(mpmath.mpf(1), abs(fraction_to_mpf(pt.a)))


def safe_scale(pt: ParamPoint) -> int:
    """Smallest scale >= 10 with c R <= 1/8 for the default point.

    c = max|y| t^-(n-1) is the 0F0 majorant constant and R the radius of
    the integration box.
    """
    with mpmath.workdps(30):
        bound = 8 * _radius(pt) * fraction_to_mpf(pt.t) ** (-(pt.nvars - 1))
        return max(10, int(mpmath.ceil(bound)))


def _delta_bound(pt: ParamPoint, k: int, radius: mpmath.mpf) -> mpmath.mpf:
    # |x_i - q^p x_j| <= R (1 + q^p) on the box
    q = fraction_to_mpf(pt.q)
    per_pair = mpmath.fprod(radius * (1 + q**p) for p in range(-(k - 1), k + 1))
    return per_pair ** comb(pt.nvars, 2)


def _poly_bound(poly: MPoly, radius: mpmath.mpf) -> mpmath.mpf:
    return mpmath.fsum(
        abs(fraction_to_mpf(c)) * radius ** sum(e) for e, c in poly.terms.items()
    )


def _f_majorant(y: Point, pt: ParamPoint, radius: mpmath.mpf) -> mpmath.mpf:
    # prod_l 1/(c R;q)_oo with c = max|y| t^-(n-1)
    n = pt.nvars
    c = max(abs(fraction_to_mpf(v)) for v in y) * fraction_to_mpf(pt.t) ** (-(n - 1))
    return (1 / mpmath.qp(c * radius, fraction_to_mpf(pt.q))) ** n


def _rho_product(point: Point, pt: ParamPoint, digits: int) -> BigFloat:
    value = BigFloat(1)
    for v in point:
        value = value * rho_value(v, pt, digits)
    return value


def _u_integral(
    integrand: MPoly, sup_error: mpmath.mpf, pt: ParamPoint, digits: int
) -> tuple[BigFloat, mpmath.mpf]:
    # (integral, truncation bound) with |Delta| and the U mass bounded on the box
    k = pt.require_k()
    meas = q_measure("U", pt, precision=digits)
    value = integrate(integrand * delta_k(pt.nvars, k, pt.q), meas)
    radius = _radius(pt)
    mass = fraction_to_mpf(1 - pt.q) ** pt.nvars
    bound = sup_error * _delta_bound(pt, k, radius) * mass
    return value, bound + value.error


def kernel_u_check(
    kappa: Partition,
    pt: ParamPoint,
    y: Point,
    degmax: int = DEFAULT_DEGMAX,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """int 0F0(y;x) U_kappa(x) dmu_U against its closed form.

    The right side is N_0 (-a t^(n-1))^|k| q^b(k') t^-b(k) P_k(y) / prod_l
    rho_a(y_l).
    """
    digits = resolve_precision(precision)
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    radius = _radius(pt)
    u = asc_u(kappa, pt).poly
    with mpmath.workdps(digits):
        tail = kernel_tail_bound("F", [radius] * n, y, pt, degmax, digits)
        lhs, bound = _u_integral(
            truncated_kernel("F", pt, degmax).in_x(y) * u,
            tail * _poly_bound(u, radius),
            pt,
            digits,
        )
        closed = norm0_exact("U", pt) * (-a * t ** (n - 1)) ** kappa.size
        closed *= q ** kappa.conjugate().b() * t ** (-kappa.b())
        closed *= macdonald_P(kappa, pt).evaluate(y)
        rhs = BigFloat.exact(closed) / _rho_product(y, pt, digits)
    return numeric_report(
        "kernel-u",
        {**_params(pt, degmax, y=y), "kappa": str(kappa)},
        lhs,
        rhs,
        tol,
        comparison_floor(digits),
        tail_bound=bound + rhs.error,
    )


def kernel_p_check(
    kappa: Partition,
    pt: ParamPoint,
    z: Point,
    degmax: int = DEFAULT_DEGMAX,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """int 0F0(z;x) P_kappa(x) dmu_U against its closed form.

    The right side is N_0 (-t^(n-1))^|k| q^b(k') t^-b(k) V_k(az) / prod_l
    rho_a(z_l).
    """
    digits = resolve_precision(precision)
    q, t, a, n = pt.q, pt.t, pt.a, pt.nvars
    radius = _radius(pt)
    p = macdonald_P(kappa, pt)
    with mpmath.workdps(digits):
        tail = kernel_tail_bound("F", [radius] * n, z, pt, degmax, digits)
        lhs, bound = _u_integral(
            truncated_kernel("F", pt, degmax).in_x(z) * p,
            tail * _poly_bound(p, radius),
            pt,
            digits,
        )
        closed = norm0_exact("U", pt) * (-(t ** (n - 1))) ** kappa.size
        closed *= q ** kappa.conjugate().b() * t ** (-kappa.b())
        closed *= asc_v(kappa, pt).poly.evaluate([a * v for v in z])
        rhs = BigFloat.exact(closed) / _rho_product(z, pt, digits)
    return numeric_report(
        "kernel-p",
        {**_params(pt, degmax, z=z), "kappa": str(kappa)},
        lhs,
        rhs,
        tol,
        comparison_floor(digits),
        tail_bound=bound + rhs.error,
    )


def kernel_pair_u_check(
    pt: ParamPoint,
    y: Point,
    z: Point,
    degmax: int = DEFAULT_DEGMAX,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """int 0F0(y;x) 0F0(z;x) dmu_U = N_0 0psi0(y; a t^(n-1) z) / prod rho_a rho_a."""
    digits = resolve_precision(precision)
    t, a, n = pt.t, pt.a, pt.nvars
    radius = _radius(pt)
    kernel = truncated_kernel("F", pt, degmax)
    with mpmath.workdps(digits):
        tail_y = kernel_tail_bound("F", [radius] * n, y, pt, degmax, digits)
        tail_z = kernel_tail_bound("F", [radius] * n, z, pt, degmax, digits)
        sup_error = tail_y * _f_majorant(z, pt, radius) + tail_z * _f_majorant(
            y, pt, radius
        )
        lhs, bound = _u_integral(
            kernel.in_x(y) * kernel.in_x(z), sup_error, pt, digits
        )
        shifted = [a * t ** (n - 1) * v for v in z]
        psi = psi00(y, shifted, pt, degmax, digits)
        assert isinstance(psi, BigFloat)
        rhs = BigFloat.exact(norm0_exact("U", pt)) * psi
        rhs = rhs / (_rho_product(y, pt, digits) * _rho_product(z, pt, digits))
    return numeric_report(
        "kernel-pair-u",
        _params(pt, degmax, y=y, z=z),
        lhs,
        rhs,
        tol,
        comparison_floor(digits),
        tail_bound=bound + rhs.error,
    )


def _require_one_variable(pt: ParamPoint) -> None:
    if pt.nvars != 1:
        raise ParameterError(
            f"The [1, oo) kernel integrals are summed in one variable, got {pt}."
        )


def _psi_at(
    y: Fraction, pt: ParamPoint, degmax: int, digits: int
) -> Callable[[Fraction], tuple[BigFloat, mpmath.mpf]]:
    # x -> (truncated 0psi0(y; x) with its tail as error, full majorant)
    poly = truncated_kernel("psi", pt, degmax).in_x([y])
    q = fraction_to_mpf(pt.q)
    c = abs(fraction_to_mpf(y))

    def value(x: Fraction) -> tuple[BigFloat, mpmath.mpf]:
        with mpmath.workdps(digits):
            tail = kernel_tail_bound("psi", [x], [y], pt, degmax, digits)
            exact = fraction_to_mpf(poly.evaluate([x]))
            majorant = mpmath.qp(-c * abs(fraction_to_mpf(x)), q)
            return BigFloat(exact, tail + abs(exact) * mpmath.mp.eps), majorant

    return value


def _v_integral(
    integrand: Callable[[Fraction], BigFloat], pt: ParamPoint, digits: int
) -> BigFloat:
    def weighted(x: Fraction) -> BigFloat:
        return weight_v(x, pt, digits) * integrand(x)

    return jackson_1d(weighted, pt, "[1,inf)", precision=digits)


def kernel_v_check(
    m: int,
    pt: ParamPoint,
    y: Fraction,
    family: Literal["V", "P"] = "V",
    degmax: int = DEFAULT_DEGMAX,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """int_1^oo 0psi0(y;x) f(x) w_V(x) d_qx in one variable, f = V_m or x^m.

    For f = V_m the right side is N_0 (-a/q)^m q^-C(m,2) rho_a(y) y^m; for
    f = x^m it is N_0 (-1)^m q^-C(m,2) rho_a(y) U_m(ay/q).
    """
    _require_one_variable(pt)
    digits = resolve_precision(precision)
    q, a = pt.q, pt.a
    kappa = Partition([m] if m else [])
    if family == "V":
        poly = asc_v(kappa, pt).poly
        closed = (-a / q) ** m * y**m
    else:
        poly = macdonald_P(kappa, pt)
        closed = (-1) ** m * asc_u(kappa, pt).poly.evaluate([a * y / q])
    closed *= q ** (-comb(m, 2)) * norm0_exact("V", pt)
    psi = _psi_at(y, pt, degmax, digits)

    def integrand(x: Fraction) -> BigFloat:
        return psi(x)[0] * poly.evaluate([x])

    lhs = _v_integral(integrand, pt, digits)
    with mpmath.workdps(digits):
        rhs = BigFloat.exact(closed) * rho_value(y, pt, digits)
    return numeric_report(
        f"kernel-{'v' if family == 'V' else 'p'}-inf",
        {**_params(pt, degmax, y=[y]), "m": str(m)},
        lhs,
        rhs,
        tol,
        comparison_floor(digits),
        tail_bound=lhs.error + rhs.error,
    )


def kernel_pair_v_check(
    pt: ParamPoint,
    y: Fraction,
    z: Fraction,
    degmax: int = DEFAULT_DEGMAX,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """int_1^oo 0psi0(y;x) 0psi0(z;x) w_V d_qx = N_0 rho_a(y) rho_a(z) 0F0(y; az/q)."""
    _require_one_variable(pt)
    digits = resolve_precision(precision)
    psi_y = _psi_at(y, pt, degmax, digits)
    psi_z = _psi_at(z, pt, degmax, digits)

    def integrand(x: Fraction) -> BigFloat:
        (vy, by), (vz, bz) = psi_y(x), psi_z(x)
        with mpmath.workdps(digits):
            # |psi_y psi_z - truncations| <= T_y B_z + B_y T_z
            error = vy.error * bz + by * vz.error
            return BigFloat(vy.value * vz.value, error)

    lhs = _v_integral(integrand, pt, digits)
    with mpmath.workdps(digits):
        kernel = f00([y], [pt.a * z / pt.q], pt, degmax, digits)
        assert isinstance(kernel, BigFloat)
        rhs = BigFloat.exact(norm0_exact("V", pt)) * kernel
        rhs = rhs * rho_value(y, pt, digits) * rho_value(z, pt, digits)
    return numeric_report(
        "kernel-pair-v",
        _params(pt, degmax, y=[y], z=[z]),
        lhs,
        rhs,
        tol,
        comparison_floor(digits),
        tail_bound=lhs.error + rhs.error,
    )


def integral_representations(
    pt: ParamPoint,
    k: int | None = None,
    degmax: int = DEFAULT_DEGMAX,
    y: Point | None = None,
    z: Point | None = None,
    kappa_degmax: int = 2,
    tol: mpmath.mpf = DEFAULT_TOL,
    precision: int | None = None,
) -> CheckReport:
    """Every kernel integral at pt, plus the [1,oo) ones in one variable.

    Args:
        pt: Parameter point with 0 < q < 1, t = q^k and a < 0.
        k: If given, must match the exponent of t = q^k.
        degmax: Truncation degree of the kernels.
        y: First evaluation point, by default (1/s, 1/(2s), ...) with s = `safe_scale`.
        z: Second evaluation point, by default equal to y.
        kappa_degmax: The U_kappa and P_kappa checks run over |kappa| <= this.
        tol: Relative tolerance; the truncation bounds must fit into it.
        precision: Decimal digits.
    """
    found = pt.require_k()
    if k is not None and k != found:
        raise ParameterError(f"t = q^{found} at {pt}, but k={k} was requested.")
    n = pt.nvars
    y = default_point(n, safe_scale(pt)) if y is None else tuple(y)
    z = y if z is None else tuple(z)
    reports = [kernel_pair_u_check(pt, y, z, degmax, tol, precision)]
    for kappa in partitions_up_to(kappa_degmax, n):
        reports.append(kernel_u_check(kappa, pt, y, degmax, tol, precision))
        reports.append(kernel_p_check(kappa, pt, z, degmax, tol, precision))
    line = pt.replace(t=pt.q, nvars=1)
    reports.append(kernel_pair_v_check(line, y[0], z[0], degmax, tol, precision))
    for m in range(kappa_degmax + 1):
        for family in ("V", "P"):
            reports.append(
                kernel_v_check(m, line, y[0], family, degmax, tol, precision)
            )
    return combine("integral-representations", _params(pt, degmax, y=y, z=z), reports)
