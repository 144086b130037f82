from fractions import Fraction

import pytest

from qasc.algebra import ParamPoint


@pytest.fixture
def generic_point() -> ParamPoint:
    return ParamPoint(q=Fraction(1, 2), t=Fraction(1, 3), a=Fraction(-1), nvars=2)


@pytest.fixture
def lattice_point() -> ParamPoint:
    # t = q, so the Jackson lattice sums apply with k = 1
    return ParamPoint(q=Fraction(1, 2), t=Fraction(1, 2), a=Fraction(-1), nvars=2)
