from fractions import Fraction

import mpmath
import pytest

from qasc.algebra import ParamPoint
from qasc.jackson import (
    insertion_check,
    norm0_check,
    norm0_closed,
    norm0_exact,
    norm_lambda_exact,
    norm_scaling_check,
    relative_tolerance,
    small_a_asymptotics,
    small_a_asymptotics_check,
    sun_norm,
    sun_norm_check,
)
from qasc.partition import Partition
from qasc.qseries import qpochhammer_exact
from qasc.utils import ParameterError, QascValueError

PRECISION = 30


def test_relative_tolerance():
    assert relative_tolerance(60) == mpmath.mpf(10) ** -30
    assert relative_tolerance(20) == mpmath.mpf(10) ** -12


def test_norm0_exact(lattice_point):
    assert norm0_exact("U", lattice_point) == Fraction(3, 16)
    line = lattice_point.replace(nvars=1)
    assert norm0_exact("U", line) == Fraction(1, 2)
    assert norm0_exact("V", line) == Fraction(1, 2)
    with pytest.raises(QascValueError):
        norm0_exact("W", lattice_point)

    with pytest.raises(ParameterError):
        norm0_exact("U", lattice_point.replace(t=Fraction(1, 3)))


def test_norm0_closed(lattice_point):
    value = norm0_closed("U", lattice_point, PRECISION)
    assert float(value) == pytest.approx(3 / 16)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_norm_lambda_one_variable(lattice_point, m):
    pt = lattice_point.replace(nvars=1, a=Fraction(-2, 3))
    q, a = pt.q, pt.a
    lam = Partition([m] if m else [])
    norm_u = (1 - q) * (-a) ** m * q ** (m * (m - 1) // 2) * qpochhammer_exact(q, q, m)
    norm_v = (1 - q) * a**m * q ** (-m * m) * qpochhammer_exact(q, q, m)
    assert norm_lambda_exact(lam, "U", pt) == norm_u
    assert norm_lambda_exact(lam, "V", pt) == norm_v


def test_sun_norm(lattice_point):
    assert sun_norm(Partition([]), lattice_point) == norm0_exact("U", lattice_point)
    for n in (1, 2, 3):
        assert sun_norm_check(lattice_point.replace(nvars=n), 2).passed

    with pytest.raises(ParameterError):
        sun_norm(Partition([1]), lattice_point.replace(t=Fraction(1, 4)))


@pytest.mark.parametrize("family", ["U", "V"])
@pytest.mark.parametrize("n", [1, 2])
def test_norm0_check(lattice_point, family, n):
    report = norm0_check(lattice_point.replace(nvars=n), family, PRECISION)
    assert report.passed
    assert report.check == f"norm0-{family}"


@pytest.mark.parametrize(
    "pt",
    [
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=2),
        ParamPoint(q=Fraction(1, 3), t=Fraction(1, 9), a=Fraction(-1, 2), nvars=2),
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=Fraction(-3, 2), nvars=3),
    ],
)
def test_scaling_and_insertion(pt):
    assert norm_scaling_check(pt, PRECISION).passed
    assert insertion_check(pt, PRECISION).passed


def test_small_a_asymptotics(lattice_point):
    table = small_a_asymptotics(lattice_point, precision=PRECISION)
    assert list(table.columns) == ["a", "leading", "norm0", "limit", "rel_err"]
    assert len(table) == 3
    assert table["limit"].to_numpy() == pytest.approx(table["limit"].iloc[0])
    assert table["rel_err"].is_monotonic_decreasing

    report = small_a_asymptotics_check(lattice_point, precision=PRECISION)
    assert report.passed
    assert "table" in report.details
