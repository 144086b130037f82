from fractions import Fraction

import mpmath
import pytest
from pydantic import ValidationError

from qasc.algebra import BigFloat, ParamPoint, parse_rational, sample_point
from qasc.utils import ParameterError, QascTypeError, QascValueError


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/2", Fraction(1, 2)),
        ("-3/7", Fraction(-3, 7)),
        ("4", Fraction(4)),
        (" -1 ", Fraction(-1)),
        ("2/4", Fraction(1, 2)),
    ],
)
def test_parse_rational(text: str, expected: Fraction):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["0.5", "1/0", "a", "", "1/-2"])
def test_parse_rational_fail(text: str):
    with pytest.raises(QascValueError):
        parse_rational(text)


def test_param_point_creation():
    pt = ParamPoint(q="1/2", t=Fraction(1, 3), a=-1, nvars=2)
    assert pt.q == Fraction(1, 2)
    assert pt.a == -1
    assert pt.as_params() == {"q": "1/2", "t": "1/3", "a": "-1", "n": "2"}
    assert pt.inverted().q == 2
    assert pt.replace(a=0).a == 0
    assert pt.k_exponent() is None


@pytest.mark.parametrize(
    "q, t, nvars",
    [
        (Fraction(0), Fraction(1, 3), 2),
        (Fraction(1), Fraction(1, 3), 2),
        (Fraction(1, 2), Fraction(0), 2),
        (Fraction(1, 2), Fraction(1, 3), 0),
    ],
)
def test_param_point_invalid(q: Fraction, t: Fraction, nvars: int):
    with pytest.raises(ValidationError):
        ParamPoint(q=q, t=t, nvars=nvars)


def test_param_point_float_rejected():
    with pytest.raises((QascTypeError, ValidationError)):
        ParamPoint(q=0.5, t=Fraction(1, 3), nvars=2)


def test_param_point_preconditions():
    pt = ParamPoint(q=Fraction(1, 2), t=Fraction(1, 8), a=-1, nvars=2)
    assert pt.require_k() == 3
    pt.require_unit_interval()
    pt.require_negative_a()

    with pytest.raises(ParameterError):
        pt.require_t_equals_q()

    with pytest.raises(ParameterError):
        pt.replace(a=1).require_negative_a()

    with pytest.raises(ParameterError):
        pt.replace(t=Fraction(1, 3)).require_k()

    with pytest.raises(ParameterError):
        pt.replace(q=2).require_unit_interval()


def test_sample_point():
    assert sample_point(3) == (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))
    assert sample_point(1, shift=1) == (Fraction(1, 3),)


def test_bigfloat_bounds():
    with mpmath.workdps(30):
        third = BigFloat.exact(Fraction(1, 3))
        total = third + third + third
        assert total.abs_diff(1) <= total.error + mpmath.mpf(10) ** -28
        assert total.error > 0
        assert float(third * 3) == pytest.approx(1.0)
