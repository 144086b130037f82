"""Dense one-variable polynomials with rational coefficients."""

from collections.abc import Iterable
from fractions import Fraction
from typing import Any

import mpmath

from qasc.algebra import MPoly, as_fraction, format_rational, fraction_to_mpf
from qasc.utils import QascValueError


def _strip(coefficients: list[Fraction]) -> tuple[Fraction, ...]:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


class QPoly1:
    """A polynomial c_0 + c_1 x + ... stored as its coefficient tuple.

    The leading coefficient is nonzero; the zero polynomial has no
    coefficients.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Fraction | int | str] = ()):
        """Initialize from the coefficients in increasing degree."""
        self._coefficients = _strip([as_fraction(c) for c in coefficients])

    @classmethod
    def x(cls) -> "QPoly1":
        """The polynomial x."""
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Fraction | int) -> "QPoly1":
        """A constant polynomial."""
        return cls((value,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients in increasing degree."""
        return self._coefficients

    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i."""
        if 0 <= i < len(self._coefficients):
            return self._coefficients[i]
        return Fraction(0)

    def _lift(self, other: object) -> "QPoly1 | None":
        if isinstance(other, QPoly1):
            return other
        if isinstance(other, Fraction | int) and not isinstance(other, bool):
            return QPoly1.constant(other)
        return None

    def __add__(self, other: object) -> "QPoly1":
        """Sum."""
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self._coefficients), len(rhs._coefficients))
        return QPoly1(self.coefficient(i) + rhs.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "QPoly1":
        """Negation."""
        return QPoly1(-c for c in self._coefficients)

    def __sub__(self, other: object) -> "QPoly1":
        """Difference."""
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "QPoly1":
        """Difference with the polynomial on the right."""
        return (-self) + other

    def __mul__(self, other: object) -> "QPoly1":
        """Product with a polynomial or a scalar."""
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if not self._coefficients or not rhs._coefficients:
            return QPoly1()
        result = [Fraction(0)] * (len(self._coefficients) + len(rhs._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            for j, b in enumerate(rhs._coefficients):
                result[i + j] += a * b
        return QPoly1(result)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        """Exact equality."""
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._coefficients == rhs._coefficients

    def __hash__(self) -> int:
        """Hash of the coefficient tuple."""
        return hash(self._coefficients)

    def mul_x(self) -> "QPoly1":
        """Multiply by x."""
        if not self._coefficients:
            return QPoly1()
        return QPoly1((0, *self._coefficients))

    def scale_argument(self, c: Fraction | int) -> "QPoly1":
        """The polynomial x -> f(c x)."""
        c = as_fraction(c)
        return QPoly1(coef * c**i for i, coef in enumerate(self._coefficients))

    def q_derivative(self, q: Fraction) -> "QPoly1":
        """(f(x) - f(qx)) / ((1 - q) x), mapping x^n to [n]_q x^(n-1)."""
        return QPoly1(
            coef * (1 - q**i) / (1 - q)
            for i, coef in enumerate(self._coefficients)
            if i > 0
        )

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact value at a rational point by Horner's rule."""
        x = as_fraction(x)
        value = Fraction(0)
        for coef in reversed(self._coefficients):
            value = value * x + coef
        return value

    def evaluate_numeric(self, x: Any) -> mpmath.mpf:
        """Value at an mpmath point, at the working precision."""
        point = fraction_to_mpf(x) if isinstance(x, Fraction | int) else mpmath.mpf(x)
        value = mpmath.mpf(0)
        for coef in reversed(self._coefficients):
            value = value * point + fraction_to_mpf(coef)
        return value

    def to_mpoly(self, nvars: int = 1, index: int = 0) -> MPoly:
        """View as a polynomial in x_(index+1) of an nvars-variable ring."""
        terms = {}
        for i, coef in enumerate(self._coefficients):
            exp = [0] * nvars
            exp[index] = i
            terms[tuple(exp)] = coef
        return MPoly(nvars, terms)

    @classmethod
    def from_mpoly(cls, poly: MPoly) -> "QPoly1":
        """Inverse of `to_mpoly` for one-variable polynomials."""
        if poly.nvars != 1:
            raise QascValueError(f"Expected one variable, got {poly.nvars}.")
        coefficients = [Fraction(0)] * (poly.degree() + 1)
        for (e,), coef in poly.terms.items():
            coefficients[e] = coef
        return cls(coefficients)

    def __repr__(self) -> str:
        """Coefficient list representation."""
        body = ", ".join(format_rational(c) for c in self._coefficients)
        return f"QPoly1([{body}])"

    def __str__(self) -> str:
        """Same printing as the one-variable MPoly."""
        return str(self.to_mpoly())
