from fractions import Fraction

import pytest

from qasc.algebra import ParamPoint
from qasc.qseries import (
    QPoly1,
    exponential_inversion_check,
    exponential_product_check,
    gfu_coefficient,
    gfv_coefficient,
    u1,
    u1_properties_check,
    v1,
)

Q = Fraction(1, 2)
A = Fraction(-1, 3)


def _pt(a: Fraction = A) -> ParamPoint:
    return ParamPoint(q=Q, t=Fraction(1, 3), a=a, nvars=1)


def test_low_degrees():
    x = QPoly1.x()
    pt = _pt()
    assert u1(0, pt) == QPoly1.constant(1)
    assert u1(1, pt) == x - (1 + A)
    assert v1(1, pt) == x - (1 + A)
    assert u1(1, pt).evaluate(1) == -A
    assert u1(2, pt) == (x - (1 + A)) * (x - (1 + A) * Q) + A * (1 - Q)
    assert v1(2, pt) == (x - (1 + A)) * (x - (1 + A) / Q) + A * (1 - 1 / Q)


def test_a_zero_product():
    x = QPoly1.x()
    assert u1(3, _pt(Fraction(0))) == (x - 1) * (x - Q) * (x - Q**2)


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-1, 3), Fraction(0)])
def test_u1_properties(a: Fraction):
    assert u1_properties_check(_pt(a), 5).passed


def test_generating_functions():
    pt = _pt()
    for n in range(5):
        assert gfu_coefficient(n, pt) == u1(n, pt)
        assert gfv_coefficient(n, pt) == v1(n, pt)


def test_exponentials():
    assert exponential_inversion_check(Q, 6).passed
    report = exponential_product_check(Fraction(1, 3), Q, precision=30)
    assert report.passed
    assert report.check == "e-E-product"


def test_qpoly1_operations():
    x = QPoly1.x()
    p = x * x + 2
    assert p.degree() == 2
    assert p.q_derivative(Q) == x * (1 + Q)
    assert p.scale_argument(2) == x * x * 4 + 2
    assert QPoly1.from_mpoly(p.to_mpoly()) == p
    assert QPoly1().degree() == -1
