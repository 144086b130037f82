import pytest

from qasc.utils import QascValueError
from qasc.verify import (
    ALL_SUITES,
    CheckReport,
    ImplementedSuites,
    SuiteOptions,
    run_suite,
)


def test_available_suites():
    assert ImplementedSuites().available_suites == [
        "appendixA",
        "appendixB",
        "hecke",
        "identities",
        "integral-reps",
        "norms",
        "orthogonality",
    ]


def test_registry():
    suites = ImplementedSuites()

    def dummy(opts: SuiteOptions) -> list[CheckReport]:
        return [
            CheckReport(check="b", passed=True),
            CheckReport(check="a", params={"n": str(opts.n)}, passed=False),
        ]

    with pytest.raises(QascValueError):
        suites.add_suite(ALL_SUITES, dummy)

    with pytest.raises(QascValueError):
        suites.add_suite("hecke", dummy)

    with pytest.raises(QascValueError):
        suites.get_suite("unknown")

    try:
        suites.add_suite("dummy", dummy)
        reports = run_suite("dummy", SuiteOptions(n=4))
        assert [r.check for r in reports] == ["a", "b"]
        assert reports[0].params == {"n": "4"}
        suites.add_suite("dummy", lambda opts: [], overwrite=True)
        assert run_suite("dummy") == []
    finally:
        suites._implemented_suites.pop("dummy", None)


def test_column_partition_suite():
    reports = run_suite("appendixA", SuiteOptions(n=3, seed=7))
    assert reports
    assert all(r.passed for r in reports)


def test_orthogonality_suite_at_fixed_point():
    opts = SuiteOptions(n=2, k=1, q="1/2", a="-1", degmax=3)
    reports = run_suite("orthogonality", opts)
    assert all(r.passed for r in reports)
    checks = [r.check for r in reports]
    assert checks == sorted(checks)
    assert "orthogonality-U" in checks
    assert "hermiticity-V" in checks


def test_identities_suite_is_deterministic():
    opts = SuiteOptions(n=2, degmax=1, seed=11)
    first = [r.to_json() for r in run_suite("identities", opts)]
    assert first == [r.to_json() for r in run_suite("identities", opts)]
    assert all('"pass":true' in line for line in first)


def test_schur_line_suite():
    reports = run_suite("appendixB", SuiteOptions(n=2, degmax=2, points=1))
    assert all(r.passed for r in reports)
    assert "hermite-trend" in {r.check for r in reports}
