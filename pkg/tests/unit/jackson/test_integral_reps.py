from fractions import Fraction

import pytest

from qasc.algebra import ParamPoint
from qasc.jackson import (
    default_point,
    integral_representations,
    kernel_p_check,
    kernel_pair_u_check,
    kernel_pair_v_check,
    kernel_u_check,
    kernel_v_check,
    safe_scale,
)
from qasc.partition import Partition
from qasc.utils import ParameterError

PRECISION = 30


def test_default_point():
    assert default_point(3) == (Fraction(1, 10), Fraction(1, 20), Fraction(1, 30))
    assert default_point(1, scale=4) == (Fraction(1, 4),)


def test_safe_scale(lattice_point):
    assert safe_scale(lattice_point.replace(nvars=1)) == 10
    assert safe_scale(lattice_point) == 16
    assert safe_scale(lattice_point.replace(a=-3)) == 48


@pytest.mark.parametrize("kappa", [[], [1], [2], [1, 1]])
def test_u_side_kernels(lattice_point, kappa):
    y = default_point(2, safe_scale(lattice_point))
    lam = Partition(kappa)
    assert kernel_u_check(lam, lattice_point, y, precision=PRECISION).passed
    assert kernel_p_check(lam, lattice_point, y, precision=PRECISION).passed


def test_u_side_pair(lattice_point):
    y = default_point(2)
    z = (Fraction(1, 8), Fraction(1, 16))
    report = kernel_pair_u_check(lattice_point, y, z, precision=PRECISION)
    assert report.passed
    assert report.params["z"] == "1/8,1/16"


@pytest.mark.parametrize("m", [0, 1, 2])
@pytest.mark.parametrize("family", ["V", "P"])
def test_v_side_kernels(lattice_point, m, family):
    line = lattice_point.replace(nvars=1)
    report = kernel_v_check(m, line, Fraction(1, 10), family, precision=PRECISION)
    assert report.passed


def test_v_side_pair(lattice_point):
    line = lattice_point.replace(nvars=1)
    report = kernel_pair_v_check(
        line, Fraction(1, 10), Fraction(1, 5), precision=PRECISION
    )
    assert report.passed


def test_v_side_needs_one_variable(lattice_point):
    with pytest.raises(ParameterError):
        kernel_v_check(1, lattice_point, Fraction(1, 10), precision=PRECISION)


@pytest.mark.parametrize(
    "pt",
    [
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=-1, nvars=1),
        ParamPoint(q=Fraction(1, 2), t=Fraction(1, 4), a=Fraction(-1, 2), nvars=2),
    ],
)
def test_integral_representations(pt):
    report = integral_representations(pt, kappa_degmax=1, precision=PRECISION)
    assert report.passed
    assert report.check == "integral-representations"


def test_integral_representations_k_mismatch(lattice_point):
    with pytest.raises(ParameterError):
        integral_representations(lattice_point, k=2, precision=PRECISION)
