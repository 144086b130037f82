"""Process-wide numeric configuration."""

import os

import mpmath

from qasc.utils._errors import QascValueError

DEFAULT_PRECISION = 60
PRECISION_ENV = "QAC_PRECISION"


def default_precision() -> int:
    """Number of decimal digits used by the numeric engines.

    The value is read from the `QAC_PRECISION` environment variable on every
    call, falling back to 60 digits.
    """
    raw = os.getenv(PRECISION_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError as e:
        raise QascValueError(
            f"{PRECISION_ENV} must be a positive integer, got {raw!r}."
        ) from e
    if value < 10:
        raise QascValueError(f"{PRECISION_ENV} must be at least 10, got {value}.")
    return value


def resolve_precision(precision: int | None) -> int:
    """Return `precision` if given, otherwise the configured default."""
    if precision is None:
        return default_precision()
    if precision < 10:
        raise QascValueError(f"precision must be at least 10, got {precision}.")
    return precision


def tail_exponent(precision: int) -> int:
    """Decimal exponent of the truncation tolerance 10^-(precision + 10)."""
    return precision + 10


def floor_exponent(precision: int) -> int:
    """Decimal exponent of the absolute comparison floor 10^-(precision / 2)."""
    return precision // 2


def tail_tolerance(precision: int) -> mpmath.mpf:
    """Truncation tolerance of infinite sums and products."""
    return mpmath.mpf(10) ** (-tail_exponent(precision))


def comparison_floor(precision: int) -> mpmath.mpf:
    """Absolute floor of relative numeric comparisons."""
    return mpmath.mpf(10) ** (-floor_exponent(precision))
