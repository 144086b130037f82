"""Multivariable Al-Salam & Carlitz polynomials in exact arithmetic."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("qasc")
except PackageNotFoundError:  # pragma: no cover
    __version__ = "uninstalled"

from qasc.algebra import BigFloat, MPoly, ParamPoint, parse_rational
from qasc.asc import AscPoly, asc_u, asc_v, det_formula
from qasc.jackson import QMeasure, inner_product, jackson_1d, q_measure
from qasc.macdonald import macdonald_P
from qasc.partition import Partition
from qasc.utils import CheckReport
from qasc.verify import SuiteOptions, run_suite

__all__ = [
    "AscPoly",
    "BigFloat",
    "CheckReport",
    "MPoly",
    "ParamPoint",
    "Partition",
    "QMeasure",
    "SuiteOptions",
    "asc_u",
    "asc_v",
    "det_formula",
    "inner_product",
    "jackson_1d",
    "macdonald_P",
    "parse_rational",
    "q_measure",
    "run_suite",
]
