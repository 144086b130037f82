from fractions import Fraction

import mpmath
import pytest

from qasc.algebra import ParamPoint
from qasc.jackson import (
    dashed_qpochhammer,
    jackson_1d,
    weight_reduction_check,
    weight_u,
    weight_v,
)
from qasc.jackson._weights import lattice_exponent
from qasc.qseries import u1
from qasc.utils import ParameterError

PRECISION = 30
SLACK = mpmath.mpf(10) ** -25


@pytest.mark.parametrize(
    "x, expected",
    [
        (Fraction(1), 0),
        (Fraction(2), 1),
        (Fraction(8), 3),
        (Fraction(3), None),
        (Fraction(1, 2), None),
        (Fraction(-2), None),
    ],
)
def test_lattice_exponent(x, expected):
    assert lattice_exponent(x, Fraction(1, 2)) == expected


def test_dashed_qpochhammer():
    q = Fraction(1, 2)
    with mpmath.workdps(PRECISION):
        value = dashed_qpochhammer(Fraction(2), q, PRECISION)
        reference = -mpmath.qp(mpmath.mpf(1) / 2, mpmath.mpf(1) / 2)
        assert abs(value.value - reference) <= value.error + SLACK

        plain = dashed_qpochhammer(Fraction(1, 3), q, PRECISION)
        reference = mpmath.qp(mpmath.mpf(1) / 3, mpmath.mpf(1) / 2)
        assert abs(plain.value - reference) <= plain.error + SLACK


def test_weight_u_mass(lattice_point):
    pt = lattice_point.replace(nvars=1)
    mass = jackson_1d(lambda x: weight_u(x, pt, PRECISION), pt, precision=PRECISION)
    with mpmath.workdps(PRECISION):
        assert abs(mass.value - mpmath.mpf(1) / 2) <= mass.error + SLACK


def test_weight_u_second_moment(lattice_point):
    pt = lattice_point.replace(nvars=1)
    first = u1(1, pt)

    def integrand(x):
        return weight_u(x, pt, PRECISION) * first.evaluate(x) ** 2

    value = jackson_1d(integrand, pt, precision=PRECISION)
    with mpmath.workdps(PRECISION):
        assert abs(value.value - mpmath.mpf(1) / 4) <= value.error + SLACK


def test_weight_v_at_one(lattice_point):
    # w_V(1) = (aq;q)_oo
    pt = lattice_point.replace(nvars=1)
    value = weight_v(Fraction(1), pt, PRECISION)
    with mpmath.workdps(PRECISION):
        reference = mpmath.qp(-mpmath.mpf(1) / 2, mpmath.mpf(1) / 2)
        assert abs(value.value - reference) <= value.error + SLACK


def test_weight_errors(lattice_point):
    pt = lattice_point.replace(nvars=1)
    with pytest.raises(ParameterError):
        weight_u(Fraction(1), pt.replace(a=Fraction(1, 2)), PRECISION)

    with pytest.raises(ParameterError):
        weight_v(Fraction(1), pt.replace(a=0), PRECISION)

    with pytest.raises(ParameterError):
        weight_u(Fraction(1), pt.replace(q=2, t=2), PRECISION)


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-2, 3)])
def test_weight_reduction_check(lattice_point, a):
    report = weight_reduction_check(lattice_point.replace(a=a), precision=PRECISION)
    assert report.passed
