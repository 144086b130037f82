"""Truncated hypergeometric kernels 0F0 and 0psi0 in the P-basis."""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Any, Literal

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from qasc.algebra import BigFloat, MPoly, ParamPoint, fraction_to_mpf
from qasc.macdonald import macdonald_P
from qasc.partition import (
    Partition,
    hook_products,
    partitions_up_to,
    principal_specialization,
)
from qasc.qseries import big_e_q_coefficients, e_q_coefficients
from qasc.utils import (
    ConvergenceError,
    QascValueError,
    qasc_logger,
    resolve_precision,
)

KernelKind = Literal["F", "psi"]


def kernel_coefficient(kind: KernelKind, kappa: Partition, pt: ParamPoint) -> Fraction:
    """Coefficient of P_kappa(x) P_kappa(y) in 0F0 or 0psi0."""
    _, h_prime = hook_products(kappa, pt)
    denominator = h_prime * principal_specialization(kappa, pt)
    if kind == "F":
        return pt.t ** kappa.b() / denominator
    if kind == "psi":
        sign = -1 if kappa.size % 2 else 1
        return sign * pt.q ** kappa.conjugate().b() / denominator
    raise QascValueError(f"Unknown kernel kind {kind}, expected 'F' or 'psi'.")


class TruncatedKernel(BaseModel):
    """sum over |kappa| <= degmax of c_kappa P_kappa(x) P_kappa(y).

    `terms` holds c_kappa for every partition of length at most n with
    |kappa| <= degmax, zero coefficients included.
    """

    kind: KernelKind
    pt: ParamPoint
    degmax: int = Field(ge=0)
    terms: dict[Partition, Fraction]
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def nvars(self) -> int:
        """Number of variables of x and of y."""
        return self.pt.nvars

    def coefficient(self, kappa: Partition) -> Fraction:
        """c_kappa, or 0 beyond the truncation."""
        return self.terms.get(kappa, Fraction(0))

    def in_x(self, y: Sequence[Fraction | int]) -> MPoly:
        """The truncation as a polynomial in x at a rational point y."""
        if len(y) != self.nvars:
            raise QascValueError(f"Point {y} does not have {self.nvars} coordinates.")
        result = MPoly.zero(self.nvars)
        for kappa, coef in self.terms.items():
            p = macdonald_P(kappa, self.pt)
            result = result + p.scale(coef * p.evaluate(y))
        return result

    def as_mpoly_xy(self) -> MPoly:
        """The truncation in 2n variables, x first and y second."""
        n = self.nvars
        result = MPoly.zero(2 * n)
        for kappa, coef in self.terms.items():
            p = macdonald_P(kappa, self.pt)
            result = result + (p.embed(2 * n) * p.embed(2 * n, offset=n)).scale(coef)
        return result

    def evaluate(
        self, x: Sequence[Any], y: Sequence[Any], precision: int | None = None
    ) -> BigFloat:
        """Numeric value at (x, y) with the majorant tail as error.

        Needs 0 < q, t < 1 for the tail bound.
        """
        precision = resolve_precision(precision)
        tail = kernel_tail_bound(self.kind, x, y, self.pt, self.degmax, precision)
        with mpmath.workdps(precision):
            total = mpmath.mpf(0)
            for kappa, coef in self.terms.items():
                p = macdonald_P(kappa, self.pt)
                value = p.evaluate_numeric(x) * p.evaluate_numeric(y)
                total += fraction_to_mpf(coef) * value
            return BigFloat(+total, tail)


@lru_cache(maxsize=128)
def truncated_kernel(kind: KernelKind, pt: ParamPoint, degmax: int) -> TruncatedKernel:
    """Coefficient table of 0F0 (kind "F") or 0psi0 (kind "psi")."""
    qasc_logger.debug(f"Building the {kind} kernel through degree {degmax} at {pt}.")
    terms = {
        kappa: kernel_coefficient(kind, kappa, pt)
        for kappa in partitions_up_to(degmax, pt.nvars)
    }
    return TruncatedKernel(kind=kind, pt=pt, degmax=degmax, terms=terms)


def _dispatch(
    kind: KernelKind,
    x: Sequence[Any] | None,
    y: Sequence[Any] | None,
    pt: ParamPoint,
    degmax: int,
    precision: int | None,
) -> MPoly | BigFloat:
    if degmax < 0:
        raise QascValueError(f"degmax must be nonnegative, got {degmax}.")
    kernel = truncated_kernel(kind, pt, degmax)
    if x is None and y is None:
        return kernel.as_mpoly_xy()
    if x is None:
        return kernel.in_x(y)  # type: ignore[arg-type]
    if y is None:
        # the kernels are symmetric in x and y
        return kernel.in_x(x)
    return kernel.evaluate(x, y, precision)


def f00(
    x: Sequence[Any] | None,
    y: Sequence[Any] | None,
    pt: ParamPoint,
    degmax: int,
    precision: int | None = None,
) -> MPoly | BigFloat:
    """The truncated kernel 0F0(x; y; q, t).

    Args:
        x: A numeric point, or None to keep x symbolic.
        y: A numeric point, or None to keep y symbolic.
        pt: The parameter point.
        degmax: Largest |kappa| kept.
        precision: Decimal digits of the numeric evaluation.

    Returns:
        An MPoly in the symbolic variables (2n of them when both are None),
        or a BigFloat carrying the majorant tail when both points are given.
    """
    return _dispatch("F", x, y, pt, degmax, precision)


def psi00(
    x: Sequence[Any] | None,
    y: Sequence[Any] | None,
    pt: ParamPoint,
    degmax: int,
    precision: int | None = None,
) -> MPoly | BigFloat:
    """The truncated kernel 0psi0(x; y; q, t); arguments as in `f00`."""
    return _dispatch("psi", x, y, pt, degmax, precision)


def _truncated_majorant(
    coefficients: list[mpmath.mpf], radii: list[mpmath.mpf], degmax: int
) -> mpmath.mpf:
    # sum over multi-indices m with |m| <= degmax of prod_i c_{m_i} r_i^{m_i}
    by_degree = [mpmath.mpf(1)] + [mpmath.mpf(0)] * degmax
    for r in radii:
        series = [c * r**m for m, c in enumerate(coefficients)]
        by_degree = [
            mpmath.fsum(by_degree[d - m] * series[m] for m in range(d + 1))
            for d in range(degmax + 1)
        ]
    return mpmath.fsum(by_degree)


def kernel_tail_bound(
    kind: KernelKind,
    x_abs: Sequence[Any],
    y: Sequence[Any],
    pt: ParamPoint,
    degmax: int,
    precision: int | None = None,
) -> mpmath.mpf:
    """Bound on the omitted terms |kappa| > degmax of a kernel at (x, y).

    With c = max_j |y_j| t^-(n-1) and positive monomial coefficients of
    P_kappa, each term is dominated by the matching term of
    prod_i 1/(c|x_i|;q)_inf for 0F0 and of prod_i (-c|x_i|;q)_inf for
    0psi0. The bound is that product minus its truncation.

    Raises:
        ParameterError: Unless 0 < q, t < 1.
        ConvergenceError: If c |x_i| >= 1 for the 0F0 majorant.
    """
    pt.require_unit_interval()
    precision = resolve_precision(precision)
    n = pt.nvars
    with mpmath.workdps(precision + 10):
        q = fraction_to_mpf(pt.q)
        scale = fraction_to_mpf(pt.t) ** (-(n - 1))
        c = max((abs(_as_mpf(v)) for v in y), default=mpmath.mpf(0)) * scale
        radii = [c * abs(_as_mpf(v)) for v in x_abs]
        if kind == "F":
            if any(r >= 1 for r in radii):
                raise ConvergenceError(
                    f"The 0F0 majorant diverges: c|x_i| >= 1 with c={c}."
                )
            full = mpmath.fprod(1 / mpmath.qp(r, q) for r in radii)
            exact = e_q_coefficients(pt.q, degmax)
        elif kind == "psi":
            full = mpmath.fprod(mpmath.qp(-r, q) for r in radii)
            exact = big_e_q_coefficients(pt.q, degmax)
        else:
            raise QascValueError(f"Unknown kernel kind {kind}.")
        partial = _truncated_majorant(
            [fraction_to_mpf(c_m) for c_m in exact], radii, degmax
        )
        tail = max(full - partial, mpmath.mpf(0))
    qasc_logger.debug(f"{kind} kernel tail beyond degree {degmax}: {tail}.")
    return tail


def _as_mpf(value: Any) -> mpmath.mpf:
    if isinstance(value, BigFloat):
        return value.value
    if isinstance(value, Fraction | int):
        return fraction_to_mpf(Fraction(value))
    return mpmath.mpf(value)
