from fractions import Fraction
from math import comb

import mpmath
import pytest

from qasc.algebra import BigFloat, MPoly, ParamPoint
from qasc.kernels import (
    f00,
    inversion_relation_check,
    kernel_coefficient,
    kernel_specialization_checks,
    kernel_tail_bound,
    lassalle_e0_check,
    psi00,
    truncated_kernel,
)
from qasc.partition import Partition
from qasc.qseries import qpochhammer_exact
from qasc.utils import ConvergenceError, ParameterError, QascValueError

Q = Fraction(1, 2)
T = Fraction(1, 3)


def _pt(n: int = 2) -> ParamPoint:
    return ParamPoint(q=Q, t=T, nvars=n)


def test_kernel_coefficients():
    pt = _pt()
    assert kernel_coefficient("F", Partition(), pt) == 1
    assert kernel_coefficient("psi", Partition(), pt) == 1
    assert kernel_coefficient("F", Partition([1]), pt) == 1 / ((1 - Q) * (1 + T))
    assert kernel_coefficient("psi", Partition([1]), pt) == -1 / ((1 - Q) * (1 + T))

    with pytest.raises(QascValueError):
        kernel_coefficient("G", Partition(), pt)  # type: ignore[arg-type]


def test_one_variable_kernels_are_q_exponentials():
    pt = _pt(1)
    y = Fraction(1, 2)
    x = MPoly.variable(1, 0)
    f_series = MPoly.zero(1)
    psi_series = MPoly.zero(1)
    for m in range(4):
        poch = qpochhammer_exact(Q, Q, m)
        f_series = f_series + (x**m).scale(y**m / poch)
        psi_series = psi_series + (x**m).scale((-y) ** m * Q ** comb(m, 2) / poch)
    assert f00(None, [y], pt, 3) == f_series
    assert psi00(None, [y], pt, 3) == psi_series
    assert f00([y], None, pt, 3) == f_series


def test_symbolic_kernel():
    pt = _pt()
    kernel = f00(None, None, pt, 2)
    assert isinstance(kernel, MPoly)
    assert kernel.nvars == 4
    assert kernel.constant_term() == 1
    assert truncated_kernel("F", pt, 2).coefficient(Partition([3])) == 0

    with pytest.raises(QascValueError):
        f00(None, None, pt, -1)


def test_numeric_kernel_with_tail():
    pt = _pt(1)
    half = Fraction(1, 2)
    value = f00([half], [half], pt, 25, precision=30)
    assert isinstance(value, BigFloat)
    with mpmath.workdps(30):
        reference = 1 / mpmath.qp(mpmath.mpf(1) / 4, mpmath.mpf(1) / 2)
        assert abs(value.value - reference) <= value.error + mpmath.mpf(10) ** -25


def test_tail_bound_errors():
    with pytest.raises(ConvergenceError):
        kernel_tail_bound("F", [2], [1], _pt(1), 3)

    with pytest.raises(ParameterError):
        kernel_tail_bound("F", [0], [0], ParamPoint(q=2, t=T, nvars=1), 3)

    assert kernel_tail_bound("psi", [0], [0], _pt(1), 3) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_kernel_identities(n: int):
    pt = _pt(n).replace(a=-1)
    assert inversion_relation_check(pt, 3).passed
    assert kernel_specialization_checks(pt, 3).passed
    assert lassalle_e0_check(pt, 3).passed
