"""Various utilities for the qasc package."""

import os

from qasc.utils._config import (
    comparison_floor,
    default_precision,
    floor_exponent,
    resolve_precision,
    tail_exponent,
    tail_tolerance,
)
from qasc.utils._errors import (
    ConvergenceError,
    NonDivisibilityError,
    NotSymmetricError,
    ParameterError,
    QascError,
    QascTypeError,
    QascValueError,
    ResonanceError,
)
from qasc.utils._logger import qasc_logger, set_logger_level
from qasc.utils._report import CheckReport, combine, exact_report, numeric_report

set_logger_level(os.getenv("QAC_LOGGER_LEVEL", "WARNING"))

__all__ = [
    # Reports
    "CheckReport",
    # Errors
    "ConvergenceError",
    "NonDivisibilityError",
    "NotSymmetricError",
    "ParameterError",
    "QascError",
    "QascTypeError",
    "QascValueError",
    "ResonanceError",
    "combine",
    # Config
    "comparison_floor",
    "default_precision",
    "exact_report",
    "floor_exponent",
    "numeric_report",
    # Logger
    "qasc_logger",
    "resolve_precision",
    "set_logger_level",
    "tail_exponent",
    "tail_tolerance",
]
