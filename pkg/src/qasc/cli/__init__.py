"""The qasc command line: macdonald, asc, det and verify."""

from qasc.cli._commands import cmd_asc, cmd_det, cmd_macdonald, cmd_verify
from qasc.cli._main import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_RESONANCE,
    EXIT_USAGE,
    canonical_json,
    main,
)
from qasc.cli._parser import CliUsageError, build_parser

__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_RESONANCE",
    "EXIT_USAGE",
    "CliUsageError",
    "build_parser",
    "canonical_json",
    "cmd_asc",
    "cmd_det",
    "cmd_macdonald",
    "cmd_verify",
    "main",
]
