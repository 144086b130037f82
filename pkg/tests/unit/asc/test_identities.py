from fractions import Fraction

import pytest

from qasc.algebra import MPoly, ParamPoint
from qasc.asc import (
    a_contiguity_check,
    column_partition_checks,
    e0_u_check,
    eigen_equation_check,
    expand_prod_in_u,
    f_sequence,
    f_tilde_sequence,
    leading_term_check,
    pieri_u_check,
    s_m,
    shifted_vanishing_check,
    special_values_check,
    special_values_closed,
    special_values_u,
    u_column_in_e,
    u_expansion_to_mpoly,
    u_generating_function_check,
)
from qasc.partition import Partition, partitions_up_to
from qasc.utils import ParameterError, QascValueError

Q = Fraction(1, 2)
T = Fraction(1, 3)


def _pt(n: int = 2, a: Fraction = Fraction(-1)) -> ParamPoint:
    return ParamPoint(q=Q, t=T, a=a, nvars=n)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-2, 5)])
def test_identities(n: int, a: Fraction):
    pt = _pt(n, a)
    for kappa in partitions_up_to(2, n):
        assert leading_term_check(kappa, pt).passed
        assert eigen_equation_check(kappa, pt).passed
        assert pieri_u_check(kappa, pt).passed
        assert e0_u_check(kappa, pt).passed
        assert a_contiguity_check(kappa, pt).passed
        assert special_values_check(kappa, pt).passed
        assert shifted_vanishing_check(kappa, pt.replace(a=0)).passed
    assert u_generating_function_check(pt, 2).passed


def test_special_values():
    pt = _pt(a=Fraction(-2, 5))
    kappa = Partition([1])
    assert special_values_u(kappa, pt) == special_values_closed(kappa, pt)
    assert special_values_closed(kappa, pt) == (Fraction(2, 5) * (1 + T), -(1 + T))


def test_shifted_vanishing_needs_a_zero():
    with pytest.raises(ParameterError):
        shifted_vanishing_check(Partition([1]), _pt())


def test_column_sequences():
    pt = _pt(3, Fraction(-2, 5))
    a = pt.a
    assert f_sequence(2, pt) == [1, -(1 + a), (1 + a) ** 2 + a * (T - 1)]
    assert f_tilde_sequence(1, pt) == [1, 1 + a]
    for m in range(5):
        assert s_m(m, pt) == T ** (m * (m - 1) // 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_product_in_u_basis(n: int):
    pt = _pt(n, Fraction(-2, 5))
    product = MPoly.one(n)
    for j in range(n):
        product = product * (MPoly.variable(n, j) - pt.a)
    assert u_expansion_to_mpoly(expand_prod_in_u(n, pt), pt) == product


@pytest.mark.parametrize("n", [1, 2, 3])
def test_column_partition_checks(n: int):
    assert column_partition_checks(_pt(n, Fraction(-2, 5)), mmax=max(n, 2)).passed


def test_column_out_of_range():
    with pytest.raises(QascValueError):
        u_column_in_e(3, _pt())
