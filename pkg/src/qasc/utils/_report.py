"""Machine readable outcome of a single identity or numeric check."""

import json
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from qasc.utils._logger import qasc_logger

_DIGITS = 20


def _fmt(value: Any) -> str | None:
    if value is None:
        return None
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, _DIGITS)
    if hasattr(value, "value") and isinstance(value.value, mpmath.mpf):
        return mpmath.nstr(value.value, _DIGITS)
    return str(value)


class CheckReport(BaseModel):
    """Result of a check, serialized with the key `pass` for `passed`."""

    check: str
    params: dict[str, str] = Field(default_factory=dict)
    lhs: str | None = None
    rhs: str | None = None
    abs_err: str | None = None
    rel_err: str | None = None
    tail_bound: str | None = None
    passed: bool = Field(alias="pass")
    details: dict[str, Any] = Field(default_factory=dict)
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    def to_dict(self) -> dict[str, Any]:
        """JSON compatible dictionary using the `pass` alias."""
        return self.model_dump(by_alias=True, mode="json")

    def to_json(self) -> str:
        """Deterministic, key sorted JSON."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def exact_report(
    check: str,
    params: Mapping[str, str],
    lhs: Any,
    rhs: Any,
    details: Mapping[str, Any] | None = None,
) -> CheckReport:
    """Report of an exact equality between rationals or polynomials."""
    passed = bool(lhs == rhs)
    abs_err: str | None = "0" if passed else None
    if isinstance(lhs, Fraction | int) and isinstance(rhs, Fraction | int):
        abs_err = _fmt(abs(Fraction(lhs) - Fraction(rhs)))
    report = CheckReport(
        check=check,
        params=dict(params),
        lhs=_fmt(lhs),
        rhs=_fmt(rhs),
        abs_err=abs_err,
        rel_err="0" if passed else None,
        passed=passed,
        details=dict(details or {}),
    )
    _log_outcome(report)
    return report


def numeric_report(
    check: str,
    params: Mapping[str, str],
    lhs: Any,
    rhs: Any,
    tol: mpmath.mpf,
    floor: mpmath.mpf,
    tail_bound: mpmath.mpf | None = None,
    details: Mapping[str, Any] | None = None,
) -> CheckReport:
    """Report of a numeric comparison.

    The check passes if |lhs - rhs| <= max(tol * scale, floor) + tail_bound,
    scale being the larger magnitude. A tail bound larger than the allowed
    error means the truncation did not converge and the check fails.

    Args:
        check: Name of the check.
        params: Parameter strings.
        lhs: Left side, an mpf or a BigFloat.
        rhs: Right side, an mpf or a BigFloat.
        tol: Relative tolerance.
        floor: Absolute floor of the comparison.
        tail_bound: Bound on the neglected tails, if any.
        details: Extra data stored in the report.
    """
    left = _as_mpf(lhs)
    right = _as_mpf(rhs)
    err = abs(left - right)
    scale = max(abs(left), abs(right))
    allowed = max(tol * scale, floor)
    tail = mpmath.mpf(0) if tail_bound is None else mpmath.mpf(tail_bound)
    converged = tail <= allowed
    passed = bool(converged and err <= allowed + tail)
    extra = dict(details or {})
    if not converged:
        extra["status"] = "tail bound exceeds the tolerance budget"
    rel = err / max(scale, floor)
    report = CheckReport(
        check=check,
        params=dict(params),
        lhs=_fmt(left),
        rhs=_fmt(right),
        abs_err=_fmt(err),
        rel_err=_fmt(rel),
        tail_bound=None if tail_bound is None else _fmt(tail),
        passed=passed,
        details=extra,
    )
    _log_outcome(report)
    return report


def combine(
    check: str,
    params: Mapping[str, str],
    reports: Iterable[CheckReport],
    details: Mapping[str, Any] | None = None,
) -> CheckReport:
    """Fold sub-checks into one report that records the first failure."""
    reports = list(reports)
    failed = [r for r in reports if not r.passed]
    extra = dict(details or {})
    extra["subchecks"] = len(reports)
    if failed:
        extra["first_failure"] = failed[0].to_dict()
    report = CheckReport(
        check=check,
        params=dict(params),
        lhs=failed[0].lhs if failed else None,
        rhs=failed[0].rhs if failed else None,
        abs_err=failed[0].abs_err if failed else None,
        rel_err=failed[0].rel_err if failed else None,
        tail_bound=_max_tail(reports),
        passed=not failed,
        details=extra,
    )
    _log_outcome(report)
    return report


def _as_mpf(value: Any) -> mpmath.mpf:
    if isinstance(value, Fraction | int):
        return mpmath.mpf(value.numerator) / value.denominator
    if hasattr(value, "value") and isinstance(value.value, mpmath.mpf):
        return value.value
    return mpmath.mpf(value)


def _max_tail(reports: list[CheckReport]) -> str | None:
    tails = [mpmath.mpf(r.tail_bound) for r in reports if r.tail_bound is not None]
    if not tails:
        return None
    return _fmt(max(tails))


def _log_outcome(report: CheckReport) -> None:
    if report.passed:
        qasc_logger.debug(f"Check {report.check} passed ({report.params}).")
    else:
        qasc_logger.warning(
            f"Check {report.check} failed ({report.params}): "
            f"lhs={report.lhs} rhs={report.rhs}."
        )
