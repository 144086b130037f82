"""Arbitrary precision floats carrying an error bound."""

from fractions import Fraction
from typing import Union

import mpmath

from qasc.algebra._rational import fraction_to_mpf

Number = Union["BigFloat", Fraction, int, mpmath.mpf]


def _rounding(value: mpmath.mpf) -> mpmath.mpf:
    return abs(value) * mpmath.mp.eps


class BigFloat:
    """An mpmath value together with an absolute error bound.

    Arithmetic propagates the bound to first order plus one rounding unit
    of the working precision. Operations should run inside an
    `mpmath.workdps` block of the precision the value was produced at.
    """

    __slots__ = ("error", "value")

    def __init__(self, value: Number, error: Number = 0):
        """Initialize from a value and a nonnegative error bound."""
        self.value = _to_mpf(value)
        self.error = abs(_to_mpf(error))

    @classmethod
    def exact(cls, value: Fraction | int) -> "BigFloat":
        """A rational rounded to the working precision."""
        mp_value = fraction_to_mpf(value)
        return cls(mp_value, _rounding(mp_value))

    def __add__(self, other: Number) -> "BigFloat":
        """Sum with accumulated bounds."""
        rhs = _lift(other)
        value = self.value + rhs.value
        return BigFloat(value, self.error + rhs.error + _rounding(value))

    __radd__ = __add__

    def __neg__(self) -> "BigFloat":
        """Negation keeps the bound."""
        return BigFloat(-self.value, self.error)

    def __sub__(self, other: Number) -> "BigFloat":
        """Difference with accumulated bounds."""
        return self + (-_lift(other))

    def __rsub__(self, other: Number) -> "BigFloat":
        """Difference with the BigFloat on the right."""
        return _lift(other) - self

    def __mul__(self, other: Number) -> "BigFloat":
        """Product with first order bound propagation."""
        rhs = _lift(other)
        value = self.value * rhs.value
        error = (
            abs(self.value) * rhs.error
            + abs(rhs.value) * self.error
            + self.error * rhs.error
            + _rounding(value)
        )
        return BigFloat(value, error)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "BigFloat":
        """Quotient; the denominator interval must exclude zero."""
        rhs = _lift(other)
        den = abs(rhs.value) - rhs.error
        if den <= 0:
            raise ZeroDivisionError("Denominator interval contains zero.")
        value = self.value / rhs.value
        error = (abs(self.value) * rhs.error + abs(rhs.value) * self.error) / (
            abs(rhs.value) * den
        ) + _rounding(value)
        return BigFloat(value, error)

    def __rtruediv__(self, other: Number) -> "BigFloat":
        """Quotient with the BigFloat as denominator."""
        return _lift(other) / self

    def __abs__(self) -> "BigFloat":
        """Absolute value."""
        return BigFloat(abs(self.value), self.error)

    def __float__(self) -> float:
        """Nearest double."""
        return float(self.value)

    def abs_diff(self, other: Number) -> mpmath.mpf:
        """|self - other| ignoring the bounds."""
        return abs(self.value - _lift(other).value)

    def rel_diff(self, other: Number, floor: mpmath.mpf | None = None) -> mpmath.mpf:
        """Relative difference, scaled by the larger magnitude (or `floor`)."""
        rhs = _lift(other)
        scale = max(abs(self.value), abs(rhs.value))
        if floor is not None:
            scale = max(scale, floor)
        if scale == 0:
            return mpmath.mpf(0)
        return abs(self.value - rhs.value) / scale

    def to_string(self, digits: int = 25) -> str:
        """Decimal string with `digits` significant digits."""
        return mpmath.nstr(self.value, digits)

    def __repr__(self) -> str:
        """Value and error bound."""
        value, error = mpmath.nstr(self.value, 20), mpmath.nstr(self.error, 3)
        return f"BigFloat({value} ± {error})"


def _to_mpf(value: Number) -> mpmath.mpf:
    if isinstance(value, BigFloat):
        return value.value
    if isinstance(value, Fraction | int):
        return fraction_to_mpf(value)
    return mpmath.mpf(value)


def _lift(value: Number) -> BigFloat:
    if isinstance(value, BigFloat):
        return value
    if isinstance(value, Fraction | int):
        return BigFloat.exact(value)
    return BigFloat(value)
