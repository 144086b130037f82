"""Check reports, parameter points and the registry of verification suites."""

from qasc.utils import CheckReport, combine, exact_report, numeric_report
from qasc.verify._options import SuiteOptions
from qasc.verify._points import find_resonance, random_param_points
from qasc.verify._suites import (
    ALL_SUITES,
    ImplementedSuites,
    SuiteFn,
    column_partition_suite,
    hecke_suite,
    identities_suite,
    integral_reps_suite,
    norms_suite,
    orthogonality_suite_runner,
    run_suite,
    schur_line_suite,
)

__all__ = [
    "ALL_SUITES",
    "CheckReport",
    "ImplementedSuites",
    "SuiteFn",
    "SuiteOptions",
    "column_partition_suite",
    "combine",
    "exact_report",
    "find_resonance",
    "hecke_suite",
    "identities_suite",
    "integral_reps_suite",
    "norms_suite",
    "numeric_report",
    "orthogonality_suite_runner",
    "random_param_points",
    "run_suite",
    "schur_line_suite",
]
