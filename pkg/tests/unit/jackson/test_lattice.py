from fractions import Fraction

import mpmath
import pytest

from qasc.algebra import ParamPoint, fraction_to_mpf
from qasc.jackson import default_truncation, jackson_1d, lattice_points
from qasc.utils import ConvergenceError, ParameterError

PRECISION = 30


def _close(value, expected: Fraction) -> bool:
    with mpmath.workdps(PRECISION):
        gap = abs(value.value - fraction_to_mpf(expected))
        return gap <= value.error + mpmath.mpf(10) ** -25


def test_lattice_points():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=1)
    points = lattice_points(pt, "[a,1]", 3)
    assert points == [
        (Fraction(1), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(1, 4)),
        (Fraction(1, 4), Fraction(1, 8)),
        (Fraction(-1), Fraction(1, 2)),
        (Fraction(-1, 2), Fraction(1, 4)),
        (Fraction(-1, 4), Fraction(1, 8)),
    ]
    upper = lattice_points(pt, "[1,inf)", 2)
    assert upper == [(Fraction(1), Fraction(1, 2)), (Fraction(2), Fraction(1))]


def test_default_truncation():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=1)
    assert default_truncation(pt, PRECISION) >= 4 * PRECISION
    with pytest.raises(ParameterError):
        default_truncation(pt.replace(q=2, t=2), PRECISION)


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-1, 3), Fraction(-5, 2)])
def test_jackson_constant(a):
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=a, nvars=1)
    value = jackson_1d(lambda x: 1, pt, precision=PRECISION)
    assert _close(value, 1 - a)


def test_jackson_linear():
    # (1 - a^2) / (1 + q) for f(x) = x
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=Fraction(-1, 2), nvars=1)
    value = jackson_1d(lambda x: x, pt, precision=PRECISION)
    assert _close(value, Fraction(1, 2))


def test_jackson_half_line():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=1)
    value = jackson_1d(lambda x: x**-3, pt, "[1,inf)", precision=PRECISION)
    assert _close(value, Fraction(2, 3))


def test_jackson_errors():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=1)
    with pytest.raises(ConvergenceError):
        jackson_1d(lambda x: 1, pt, "[1,inf)", precision=PRECISION)

    with pytest.raises(ParameterError):
        jackson_1d(lambda x: 1, pt.replace(a=Fraction(1, 2)), precision=PRECISION)

    with pytest.raises(ConvergenceError):
        jackson_1d(lambda x: 1, pt, truncation=1, precision=PRECISION)
