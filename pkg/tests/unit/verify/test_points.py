from fractions import Fraction

import pytest

from qasc.algebra import ParamPoint
from qasc.partition import Partition
from qasc.utils import ParameterError, QascValueError
from qasc.verify import SuiteOptions, find_resonance, random_param_points


def test_random_points_are_seeded():
    first = random_param_points(7, 3, 2, 2)
    assert first == random_param_points(7, 3, 2, 2)
    assert len(set(first)) == 3
    for pt in first:
        assert 0 < pt.q <= Fraction(2, 3)
        assert -2 <= pt.a < 0
        assert 0 < pt.t < 1
        assert pt.t != pt.q
        assert pt.nvars == 2
        assert find_resonance(pt, 2) is None


@pytest.mark.parametrize("k", [1, 2])
def test_random_lattice_points(k):
    for pt in random_param_points(3, 2, 2, 1, k=k):
        assert pt.t == pt.q**k
        assert pt.require_k() == k


def test_random_points_errors():
    with pytest.raises(QascValueError):
        random_param_points(0, 0, 2, 2)


def test_find_resonance(generic_point):
    assert find_resonance(generic_point, 3) is None
    pt = ParamPoint(q=-1, t=Fraction(1, 3), a=-1, nvars=1)
    assert find_resonance(pt, 2) == (Partition(), Partition([2]))


def test_options_fixed_point():
    opts = SuiteOptions(n=3, k=2, q="1/2")
    (pt,) = opts.generic_points()
    assert pt == ParamPoint(q=Fraction(1, 2), t=Fraction(1, 4), a=-1, nvars=3)
    assert opts.lattice_points() == [pt]
    assert opts.lattice_points(k=1)[0].t == Fraction(1, 2)

    mixed = SuiteOptions(q="1/2", t="1/3", a="-2/5")
    assert mixed.generic_points()[0].a == Fraction(-2, 5)
    with pytest.raises(ParameterError):
        mixed.lattice_points()


def test_options_random_points():
    opts = SuiteOptions(seed=5, points=3)
    assert opts.generic_points() == random_param_points(5, 3, 2, 2)
    assert opts.lattice_points() == random_param_points(5, 3, 2, 2, k=1)
