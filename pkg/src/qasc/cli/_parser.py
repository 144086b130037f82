"""Argument parsing of the qasc command line."""

import argparse

from qasc.algebra import parse_rational
from qasc.partition import Partition
from qasc.verify import ALL_SUITES, ImplementedSuites


class CliUsageError(Exception):
    """Error raised instead of exiting when the flags cannot be parsed."""

    pass


class JsonArgumentParser(argparse.ArgumentParser):
    """An ArgumentParser whose usage errors are raised, not printed."""

    def error(self, message: str):  # type: ignore[override]
        """Raise CliUsageError so that main can report it as JSON."""
        raise CliUsageError(f"{self.prog}: {message}")


def _add_point_flags(
    parser: argparse.ArgumentParser, t: bool = True, a: bool = True
) -> None:
    parser.add_argument(
        "--partition",
        type=Partition.from_string,
        required=True,
        help='Partition as comma separated parts, e.g. "2,1" ("0" is empty).',
    )
    parser.add_argument("--n", type=int, required=True, help="Number of variables.")
    parser.add_argument("--q", type=parse_rational, required=True, help='e.g. "1/2".')
    if t:
        parser.add_argument("--t", type=parse_rational, required=True, help="t.")
    if a:
        parser.add_argument(
            "--a", type=parse_rational, default=parse_rational("0"), help="a."
        )


def build_parser() -> JsonArgumentParser:
    """Build the parser with the macdonald, asc, det and verify sub-commands."""
    parser = JsonArgumentParser(
        prog="qasc",
        description="Exact multivariable Al-Salam & Carlitz polynomials.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    macdonald = commands.add_parser("macdonald", help="Macdonald polynomial P.")
    _add_point_flags(macdonald, a=False)

    asc = commands.add_parser("asc", help="U or V polynomial by a chosen route.")
    _add_point_flags(asc)
    asc.add_argument("--family", choices=["U", "V"], default="U")
    asc.add_argument(
        "--route",
        choices=["eigen", "genfun", "expop", "all"],
        default="eigen",
        help="Construction route; `all` also reports whether the routes agree.",
    )

    det = commands.add_parser("det", help="Determinant formula at t = q.")
    _add_point_flags(det, t=False)

    verify = commands.add_parser("verify", help="Run a verification suite.")
    verify.add_argument(
        "--suite",
        choices=[*ImplementedSuites().available_suites, ALL_SUITES],
        default=ALL_SUITES,
    )
    verify.add_argument("--n", type=int, default=2)
    verify.add_argument("--k", type=int, default=1, help="Exponent of t = q^k.")
    verify.add_argument("--degmax", type=int, default=2)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument(
        "--points", type=int, default=5, help="Number of random parameter points."
    )
    verify.add_argument(
        "--precision",
        type=int,
        default=None,
        help="Decimal digits; defaults to QAC_PRECISION or 60.",
    )
    verify.add_argument("--q", type=parse_rational, default=None)
    verify.add_argument("--t", type=parse_rational, default=None)
    verify.add_argument("--a", type=parse_rational, default=None)
    return parser
