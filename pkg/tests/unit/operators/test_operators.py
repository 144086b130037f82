from fractions import Fraction

import pytest
from pydantic import ValidationError

from qasc.algebra import MPoly, ParamPoint, elementary
from qasc.macdonald import macdonald_P
from qasc.operators import (
    LinearOp,
    apply,
    b_operator_checks,
    commutator_checks,
    e_k_op,
    e_op,
    m1,
    m1_op,
    m1_tilde,
    one_variable_eigen_check,
    operator_b,
    q_partial,
    tau_op,
)
from qasc.partition import Partition, eigenvalue, partitions_up_to
from qasc.utils import NonDivisibilityError, QascValueError

Q = Fraction(1, 2)
T = Fraction(1, 3)


def _pt(n: int = 2, a: Fraction = Fraction(-1)) -> ParamPoint:
    return ParamPoint(q=Q, t=T, a=a, nvars=n)


def test_tau():
    pt = _pt()
    x1, x2 = MPoly.variable(2, 0), MPoly.variable(2, 1)
    assert tau_op(1, pt)(x1 * x2) == (x1 * x2).scale(Q)
    assert tau_op(2, pt, inverse=True)(x2 * x2) == (x2 * x2).scale(4)
    assert q_partial(x1**3, 0, Q) == (x1**2).scale(1 + Q + Q**2)


def test_tau_index_validation():
    with pytest.raises(ValidationError):
        tau_op(3, _pt())

    with pytest.raises(ValidationError):
        e_k_op(3, _pt())


def test_e0_on_e1():
    pt = _pt()
    assert e_op(elementary(1, 2), 0, pt) == MPoly.constant(2, 1 + T)
    assert apply(e_k_op(0, pt), MPoly.one(2)).is_zero()


def test_b_kills_constants():
    pt = _pt()
    assert operator_b(pt)(MPoly.one(2)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_m1_eigen(n: int):
    pt = _pt(n)
    for kappa in partitions_up_to(3, n):
        p = macdonald_P(kappa, pt)
        assert m1_op(pt)(p) == p.scale(eigenvalue(kappa, pt))
        assert m1_tilde(p, pt) == p.scale(eigenvalue(kappa, pt.inverted()))


def test_m1_needs_symmetric_input():
    with pytest.raises(NonDivisibilityError):
        m1(MPoly.variable(2, 0), _pt())


def test_wrong_ring():
    with pytest.raises(QascValueError):
        m1(MPoly.one(3), _pt())

    with pytest.raises(QascValueError):
        LinearOp(kind="M1", pt=_pt()).apply(MPoly.one(1))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("a", [Fraction(-1), Fraction(0), Fraction(-2, 5)])
def test_operator_identities(n: int, a: Fraction):
    pt = _pt(n, a)
    assert commutator_checks(pt, 2).passed
    assert b_operator_checks(pt, 2).passed


def test_one_variable_eigen():
    assert one_variable_eigen_check(_pt(1), 5).passed


def test_m1_on_constant():
    pt = _pt(3)
    assert m1(MPoly.one(3), pt) == MPoly.constant(3, 1 + T + T**2)
    assert macdonald_P(Partition(), pt) == MPoly.one(3)
