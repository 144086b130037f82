import json
from fractions import Fraction

import mpmath
import pytest

from qasc.utils import (
    CheckReport,
    ParameterError,
    QascValueError,
    ResonanceError,
    combine,
    default_precision,
    exact_report,
    numeric_report,
    resolve_precision,
    set_logger_level,
    tail_tolerance,
)

PARAMS = {"q": "1/2", "n": "2"}


def test_exact_report():
    report = exact_report("sample", PARAMS, Fraction(1, 2), Fraction(1, 2))
    assert report.passed
    assert report.abs_err == "0"
    assert report.lhs == "1/2"

    report = exact_report("sample", PARAMS, Fraction(1, 2), Fraction(1, 3))
    assert not report.passed
    assert report.abs_err == "1/6"


def test_report_json_uses_pass_key():
    report = exact_report("sample", PARAMS, 1, 1, {"n": 3})
    data = report.to_dict()
    assert data["pass"] is True
    assert "passed" not in data
    assert data["details"] == {"n": 3}
    text = report.to_json()
    assert json.loads(text) == data
    assert text == json.dumps(data, sort_keys=True, separators=(",", ":"))
    assert CheckReport(**data).passed


def test_numeric_report():
    with mpmath.workdps(30):
        tol = mpmath.mpf(10) ** -20
        floor = mpmath.mpf(10) ** -25
        one = mpmath.mpf(1)
        assert numeric_report("n", PARAMS, one, one + tol / 10, tol, floor).passed
        assert not numeric_report("n", PARAMS, one, one + tol * 10, tol, floor).passed
        # a tail bound above the budget is a convergence failure
        report = numeric_report(
            "n", PARAMS, one, one, tol, floor, tail_bound=mpmath.mpf(10) ** -3
        )
        assert not report.passed
        assert "status" in report.details


def test_combine():
    good = exact_report("a", PARAMS, 1, 1)
    bad = exact_report("b", PARAMS, 1, 2)
    report = combine("both", PARAMS, [good, bad])
    assert not report.passed
    assert report.details["subchecks"] == 2
    assert report.details["first_failure"]["check"] == "b"
    assert combine("one", PARAMS, [good]).passed


def test_precision_config(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("QAC_PRECISION", raising=False)
    assert default_precision() == 60
    monkeypatch.setenv("QAC_PRECISION", "40")
    assert default_precision() == 40
    assert resolve_precision(None) == 40
    assert resolve_precision(25) == 25
    assert tail_tolerance(30) == mpmath.mpf(10) ** -40

    monkeypatch.setenv("QAC_PRECISION", "abc")
    with pytest.raises(QascValueError):
        default_precision()

    with pytest.raises(QascValueError):
        resolve_precision(5)


def test_errors():
    err = ResonanceError("clash", pair=("(1)", "(2)"))
    assert err.pair == ("(1)", "(2)")
    assert isinstance(ParameterError("x"), ValueError)

    with pytest.raises(QascValueError):
        set_logger_level("LOUD")
