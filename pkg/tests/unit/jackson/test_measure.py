from fractions import Fraction

import mpmath
import pytest

from qasc.algebra import MPoly, ParamPoint
from qasc.jackson import (
    delta_k,
    exact_moment_u,
    inner_product,
    integrate,
    moments,
    q_measure,
)
from qasc.utils import NotSymmetricError, ParameterError, QascValueError

PRECISION = 30
SLACK = mpmath.mpf(10) ** -25


def test_q_measure(lattice_point):
    meas = q_measure("U", lattice_point, precision=PRECISION)
    assert meas.k == 1
    assert meas.nvars == 2
    assert meas.domain == "[a,1]"
    assert meas.truncation >= 4 * PRECISION
    assert q_measure("V", lattice_point, precision=PRECISION).domain == "[1,inf)"

    cubic = lattice_point.replace(t=Fraction(1, 8))
    assert q_measure("U", cubic, truncation=10, precision=PRECISION).k == 3


def test_q_measure_errors(lattice_point, generic_point):
    with pytest.raises(QascValueError):
        q_measure("W", lattice_point)

    with pytest.raises(ParameterError):
        q_measure("U", generic_point)

    with pytest.raises(ParameterError):
        q_measure("U", lattice_point.replace(a=Fraction(1, 2)))

    with pytest.raises(ParameterError):
        q_measure("V", lattice_point.replace(a=0))


def test_delta_k():
    q = Fraction(1, 2)
    expected = MPoly(2, {(2, 0): 1, (1, 1): Fraction(-3, 2), (0, 2): Fraction(1, 2)})
    assert delta_k(2, 1, q) == expected
    assert delta_k(1, 3, q) == MPoly.one(1)
    assert delta_k(2, 2, q).degree() == 4
    with pytest.raises(QascValueError):
        delta_k(2, 0, q)


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-1, 2)])
def test_exact_moment_u(lattice_point, a):
    pt = lattice_point.replace(a=a)
    assert exact_moment_u(0, pt) == 1
    assert exact_moment_u(1, pt) == 1 + a
    with pytest.raises(QascValueError):
        exact_moment_u(-1, pt)


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-3, 4)])
def test_moments_match_exact(lattice_point, a):
    pt = lattice_point.replace(a=a)
    table = moments("U", pt, 3, precision=PRECISION)
    with mpmath.workdps(PRECISION):
        for j, value in enumerate(table):
            expected = (1 - pt.q) * exact_moment_u(j, pt)
            reference = mpmath.mpf(expected.numerator) / expected.denominator
            assert abs(value.value - reference) <= value.error + SLACK


def test_inner_product_of_one(lattice_point):
    meas = q_measure("U", lattice_point, precision=PRECISION)
    one = MPoly.one(2)
    value = inner_product(one, one, meas)
    with mpmath.workdps(PRECISION):
        assert abs(value.value - mpmath.mpf(3) / 16) <= value.error + SLACK


def test_lattice_method_matches_moments():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=2)
    meas = q_measure("U", pt, truncation=48, precision=20)
    x1, x2 = MPoly.variable(2, 0), MPoly.variable(2, 1)
    h = x1 * x1 + x2 * x2 - x1 * x2 + MPoly.one(2)
    by_moments = integrate(h, meas)
    by_lattice = integrate(h, meas, method="lattice")
    with mpmath.workdps(20):
        gap = abs(by_moments.value - by_lattice.value)
        assert gap <= by_moments.error + by_lattice.error + mpmath.mpf(10) ** -12


def test_integrate_errors(lattice_point):
    meas = q_measure("U", lattice_point, precision=PRECISION)
    with pytest.raises(QascValueError):
        integrate(MPoly.one(2), meas, method="simpson")

    with pytest.raises(QascValueError):
        integrate(MPoly.one(3), meas)

    with pytest.raises(NotSymmetricError):
        inner_product(MPoly.variable(2, 0), MPoly.one(2), meas)
