"""Exact rational scalars and their conversion helpers."""

import re
from fractions import Fraction
from typing import TypeAlias

import mpmath

from qasc.utils import QascTypeError, QascValueError

Rational: TypeAlias = Fraction
RationalLike: TypeAlias = Fraction | int | str

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational number written as "p/q" or "p".

    Floating point notation is rejected on purpose: every parameter entering
    the exact core must be an exact rational.

    Args:
        text: The string to parse, e.g. "1/2", "-1", "-3/7".
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise QascValueError(f"Invalid rational {text!r}, expected 'p/q' or 'p'.")
    numerator, denominator = match.groups()
    den = int(denominator) if denominator is not None else 1
    if den == 0:
        raise QascValueError(f"Invalid rational {text!r}: zero denominator.")
    return Fraction(int(numerator), den)


def as_fraction(value: object) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    match value:
        case bool():
            raise QascTypeError("Booleans are not rationals.")
        case Fraction():
            return value
        case int():
            return Fraction(value)
        case str():
            return parse_rational(value)
        case _:
            raise QascTypeError(
                f"Expected an exact rational (int, Fraction or 'p/q'), "
                f"got {type(value).__name__}."
            )


def fraction_to_mpf(value: Fraction | int) -> mpmath.mpf:
    """Convert an exact rational to an mpmath float at the working precision."""
    if isinstance(value, int):
        return mpmath.mpf(value)
    return mpmath.mpf(value.numerator) / value.denominator


def format_rational(value: Fraction | int) -> str:
    """Canonical "p/q" (or "p") string of an exact rational."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_SAMPLE_DENOMINATORS = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def sample_point(n: int, shift: int = 0) -> tuple[Fraction, ...]:
    """A fixed point of distinct unit fractions 1/p, used to specialize kernels."""
    if n + shift > len(_SAMPLE_DENOMINATORS):
        raise QascValueError(f"No sample point with {n} coordinates at shift {shift}.")
    return tuple(Fraction(1, p) for p in _SAMPLE_DENOMINATORS[shift : shift + n])
