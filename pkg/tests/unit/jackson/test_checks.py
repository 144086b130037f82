from fractions import Fraction

import pytest

from qasc.algebra import ParamPoint
from qasc.jackson import (
    gram_matrix,
    hermiticity_check,
    kadell_check,
    one_variable_orthogonality,
    orthogonality_suite,
    q_measure,
    uv_inversion_check,
)
from qasc.utils import ParameterError

PRECISION = 30


@pytest.mark.parametrize("a", [Fraction(-1), Fraction(-1, 2)])
def test_one_variable_orthogonality(lattice_point, a):
    report = one_variable_orthogonality(lattice_point.replace(a=a), 3, PRECISION)
    assert report.passed


def test_gram_matrix(lattice_point):
    meas = q_measure("U", lattice_point, precision=PRECISION)
    gram = gram_matrix(1, meas)
    assert list(gram.index) == ["()", "(1)"]
    assert gram.loc["()", "()"] == pytest.approx(3 / 16)
    assert gram.loc["()", "(1)"] == pytest.approx(0, abs=1e-20)


@pytest.mark.parametrize("family", ["U", "V"])
@pytest.mark.parametrize(
    "pt",
    [
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=2),
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 4), a=Fraction(-2, 3), nvars=2),
    ],
)
def test_orthogonality_suite(pt, family):
    meas = q_measure(family, pt, precision=PRECISION)
    report = orthogonality_suite(2, meas)
    assert report.passed
    assert report.check == f"orthogonality-{family}"
    assert "gram" in report.details


@pytest.mark.parametrize("family", ["U", "V"])
def test_hermiticity(lattice_point, family):
    meas = q_measure(family, lattice_point, precision=PRECISION)
    assert hermiticity_check(meas, 2).passed


@pytest.mark.parametrize("p", [0, 1, 2])
def test_uv_inversion(lattice_point, p):
    assert uv_inversion_check(lattice_point, p, precision=PRECISION).passed


def test_kadell(lattice_point):
    for n in (2, 3):
        assert kadell_check(lattice_point.replace(nvars=n), 2, PRECISION).passed

    with pytest.raises(ParameterError):
        kadell_check(lattice_point.replace(t=Fraction(1, 4)), 2, PRECISION)
