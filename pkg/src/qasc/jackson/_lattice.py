"""One-variable Jackson q-integrals on [a, 1] and [1, oo)."""

from collections.abc import Callable
from fractions import Fraction
from typing import Any, Literal

import mpmath

from qasc.algebra import BigFloat, ParamPoint, fraction_to_mpf
from qasc.utils import (
    ConvergenceError,
    ParameterError,
    qasc_logger,
    resolve_precision,
    tail_tolerance,
)

Domain = Literal["[a,1]", "[1,inf)"]
Integrand = Callable[[Fraction], Any]


def default_truncation(pt: ParamPoint, precision: int | None = None) -> int:
    """Lattice points per branch: max(4 precision, ceil(log tol / log q) + 1)."""
    digits = resolve_precision(precision)
    if not 0 < pt.q < 1:
        raise ParameterError(f"Jackson integrals need 0 < q < 1, got {pt}.")
    with mpmath.workdps(digits):
        tol = tail_tolerance(digits)
        needed = mpmath.ceil(mpmath.log(tol) / mpmath.log(fraction_to_mpf(pt.q)))
    return max(4 * digits, int(needed) + 1)


def branches(pt: ParamPoint, domain: Domain) -> list[tuple[Fraction, Fraction, int]]:
    """(first point, ratio, sign) of every geometric branch of the lattice.

    The Jackson weight of a point x is sign (1 - q) x.
    """
    if domain == "[a,1]":
        if not pt.a < 0:
            raise ParameterError(f"The domain [a, 1] needs a < 0, got a={pt.a}.")
        return [(Fraction(1), pt.q, 1), (pt.a, pt.q, -1)]
    if domain == "[1,inf)":
        return [(Fraction(1), 1 / pt.q, 1)]
    raise ParameterError(f"Unknown domain {domain!r}.")


def lattice_points(
    pt: ParamPoint, domain: Domain, truncation: int
) -> list[tuple[Fraction, Fraction]]:
    """The truncated lattice as (x, Jackson weight) pairs, branch by branch."""
    factor = 1 - pt.q
    points = []
    for start, ratio, sign in branches(pt, domain):
        x = start
        for _ in range(truncation):
            points.append((x, sign * factor * x))
            x *= ratio
    return points


def as_bigfloat(value: Any) -> BigFloat:
    """Lift a rational, mpf or BigFloat value."""
    if isinstance(value, BigFloat):
        return value
    if isinstance(value, Fraction | int):
        return BigFloat.exact(value)
    return BigFloat(value)


def geometric_tail(terms: list[BigFloat], what: str) -> mpmath.mpf:
    """Bound on the omitted terms from the ratio of the last two included ones.

    Raises:
        ConvergenceError: If the terms do not shrink.
    """
    if len(terms) < 2:
        raise ConvergenceError(f"{what}: at least two terms are needed for a tail.")
    last, previous = abs(terms[-1].value), abs(terms[-2].value)
    if last == 0:
        return mpmath.mpf(0)
    if previous == 0:
        raise ConvergenceError(f"{what}: cannot estimate the tail ratio.")
    ratio = last / previous
    if ratio >= 1:
        raise ConvergenceError(
            f"{what}: lattice terms do not decay (ratio {mpmath.nstr(ratio, 5)})."
        )
    return last * ratio / (1 - ratio)


def jackson_1d(
    f: Integrand,
    pt: ParamPoint,
    domain: Domain = "[a,1]",
    truncation: int | None = None,
    precision: int | None = None,
) -> BigFloat:
    """The Jackson integral of f over [a, 1] or [1, oo).

    int_a^1 f d_qx = (1-q) (sum_m f(q^m) q^m - a sum_m f(a q^m) q^m) and
    int_1^oo f d_qx = (1-q) sum_m f(q^-m) q^-m. Every branch is summed
    in lattice order up to `truncation` points; the geometric tail of the
    last two terms is added to the error bound.

    Args:
        f: Called with exact lattice points; may return a rational, an mpf
            or a BigFloat.
        pt: The parameter point; only q and a are used.
        domain: "[a,1]" or "[1,inf)".
        truncation: Points per branch, by default `default_truncation`.
        precision: Decimal digits.

    Raises:
        ConvergenceError: If the terms of a branch do not decay.
    """
    digits = resolve_precision(precision)
    n_points = default_truncation(pt, digits) if truncation is None else truncation
    factor = 1 - pt.q
    with mpmath.workdps(digits):
        total = BigFloat(0)
        tail = mpmath.mpf(0)
        for start, ratio, sign in branches(pt, domain):
            terms = []
            x = start
            for _ in range(n_points):
                terms.append(as_bigfloat(f(x)) * BigFloat.exact(sign * factor * x))
                x *= ratio
            for term in terms:
                total = total + term
            tail += geometric_tail(terms, f"Jackson sum over {domain}")
        qasc_logger.debug(
            f"Jackson sum over {domain} with {n_points} points per branch, "
            f"tail {mpmath.nstr(tail, 3)}."
        )
        return BigFloat(total.value, total.error + tail)
