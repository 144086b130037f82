from fractions import Fraction

import pandas as pd
import pytest

from qasc.algebra import ParamPoint, schur
from qasc.asc import (
    asc_u,
    det_formula,
    det_formula_check,
    hermite_reference,
    hermite_trend,
    hermite_trend_check,
    hermite_value,
)
from qasc.partition import Partition, partitions_up_to
from qasc.utils import ParameterError, QascValueError


def test_det_formula_matches_eigen_route(lattice_point: ParamPoint):
    for kappa in partitions_up_to(3, 2):
        assert det_formula(kappa, lattice_point) == asc_u(kappa, lattice_point).poly
        assert det_formula_check(kappa, lattice_point).passed


def test_det_formula_leading_part(lattice_point: ParamPoint):
    kappa = Partition([2, 1])
    det = det_formula(kappa, lattice_point)
    assert det.homogeneous_part(3) == schur(kappa, 2)


def test_det_formula_needs_schur_line(generic_point: ParamPoint):
    with pytest.raises(ParameterError):
        det_formula(Partition([1]), generic_point)


def test_hermite_reference():
    half = Fraction(1, 2)
    assert hermite_reference(Partition([1]), [half]) == pytest.approx(0.5)
    assert hermite_reference(Partition(), [half, Fraction(1, 3)]) == pytest.approx(1.0)
    # He_2(x) = x^2 - 1
    assert hermite_reference(Partition([2]), [half]) == pytest.approx(-0.75)

    with pytest.raises(QascValueError):
        hermite_reference(Partition([1]), [half, half])


def test_hermite_value_degree_one():
    value = hermite_value(Partition([1]), [Fraction(1, 2)], Fraction(9, 10))
    assert float(value) == pytest.approx(0.5)


def test_hermite_trend():
    table = hermite_trend(Partition([3]), [Fraction(1, 2)])
    assert isinstance(table, pd.DataFrame)
    assert list(table.columns) == ["q", "value", "reference", "abs_err"]
    assert len(table) == 3
    assert hermite_trend_check(Partition([3]), [Fraction(1, 2)]).passed
