"""q-numbers, q-Pochhammer symbols and Gaussian binomials."""

import math
from fractions import Fraction

import mpmath

from qasc.algebra import BigFloat, as_fraction, fraction_to_mpf
from qasc.utils import (
    ConvergenceError,
    QascValueError,
    qasc_logger,
    resolve_precision,
    tail_tolerance,
)

INFINITY = math.inf


def qint(n: int, q: Fraction) -> Fraction:
    """[n]_q = (1 - q^n) / (1 - q), read as 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise QascValueError(f"[n]_q needs n >= 0, got {n}.")
    return sum((q**i for i in range(n)), Fraction(0))


def qfactorial(n: int, q: Fraction) -> Fraction:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= qint(i, q)
    return value


def qpochhammer_exact(x: Fraction | int, q: Fraction | int, n: int) -> Fraction:
    """(x;q)_n = (1 - x)(1 - xq)...(1 - xq^(n-1)) in exact arithmetic."""
    if n < 0:
        raise QascValueError(f"(x;q)_n needs n >= 0, got {n}.")
    x, q = as_fraction(x), as_fraction(q)
    value = Fraction(1)
    power = Fraction(1)
    for _ in range(n):
        value *= 1 - x * power
        power *= q
    return value


def _qpochhammer_infinite(
    x: Fraction | BigFloat, q: Fraction, precision: int
) -> BigFloat:
    if not 0 < abs(q) < 1:
        raise ConvergenceError(f"(x;q)_inf diverges for |q| = {abs(q)} >= 1.")
    tol = tail_tolerance(precision)
    q_mp = fraction_to_mpf(q)
    x_big = x if isinstance(x, BigFloat) else BigFloat.exact(x)
    x_abs = abs(x_big.value) + x_big.error
    product = BigFloat(1)
    power = mpmath.mpf(1)
    m = 0
    # stop once |x| q^m < tol
    while x_abs * abs(power) >= tol:
        product = product * (1 - x_big * BigFloat(power))
        power *= q_mp
        m += 1
    tail = x_abs * abs(power) / (1 - abs(q_mp))
    relative = mpmath.exp(tail) - 1
    qasc_logger.debug(f"(x;q)_inf truncated after {m} factors.")
    return BigFloat(product.value, product.error + abs(product.value) * relative)


def qpochhammer(
    x: Fraction | int | BigFloat,
    q: Fraction | int,
    n: int | float = INFINITY,
    precision: int | None = None,
) -> Fraction | BigFloat:
    """The q-Pochhammer symbol (x;q)_n for finite n or n = infinity.

    Finite symbols of rationals are exact. The infinite product is
    truncated at the first m with |x| q^m below 10^-(precision+10); the
    relative tail bound exp(|x| q^m / (1 - q)) - 1 is folded into the
    error of the returned BigFloat.

    Args:
        x: The base point, rational or BigFloat.
        q: The nome.
        n: Number of factors, or `math.inf`.
        precision: Decimal digits of the numeric result.
    """
    q = as_fraction(q)
    if n == INFINITY:
        digits = resolve_precision(precision)
        with mpmath.workdps(digits):
            return _qpochhammer_infinite(
                x if isinstance(x, BigFloat) else as_fraction(x), q, digits
            )
    if not isinstance(n, int):
        raise QascValueError(f"n must be an integer or infinity, got {n}.")
    if isinstance(x, BigFloat):
        value = BigFloat(1)
        for i in range(n):
            value = value * (1 - x * BigFloat.exact(q**i))
        return value
    return qpochhammer_exact(x, q, n)


def tbinomial(m: int, r: int, t: Fraction) -> Fraction:
    """Gaussian binomial (t;t)_m / ((t;t)_r (t;t)_(m-r))."""
    if not 0 <= r <= m:
        raise QascValueError(f"Expected 0 <= r <= m, got r={r}, m={m}.")
    t = as_fraction(t)
    # the product form also covers t = 1
    value = Fraction(1)
    for i in range(r):
        value *= qint(m - i, t) / qint(i + 1, t)
    return value
