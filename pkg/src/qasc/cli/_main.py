"""Entry point of the qasc command line."""

import json
import sys
from collections.abc import Sequence
from typing import Any

from pydantic import ValidationError

from qasc.cli._commands import COMMANDS
from qasc.cli._parser import CliUsageError, build_parser
from qasc.utils import (
    ConvergenceError,
    NonDivisibilityError,
    QascValueError,
    ResonanceError,
    qasc_logger,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESONANCE = 3


def canonical_json(value: Any) -> str:
    """Key sorted JSON with fixed separators."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def _emit(value: Any) -> None:
    sys.stdout.write(canonical_json(value) + "\n")


def _error(kind: str, message: str, **extra: Any) -> dict[str, Any]:
    return {"error": kind, "message": message, **extra}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code.

    Exit codes: 0 on success, 1 if a check failed or a computation did not
    converge, 2 on invalid flags or parameters, 3 on resonant parameters.
    Errors are written to stdout as {"error": kind, "message": text}.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
        payload, code = COMMANDS[args.command](args)
    except CliUsageError as e:
        _emit(_error("usage", str(e)))
        return EXIT_USAGE
    except ResonanceError as e:
        pair = [str(p) for p in e.pair] if e.pair is not None else None
        _emit(_error("resonance", str(e), pair=pair))
        return EXIT_RESONANCE
    except NonDivisibilityError as e:
        _emit(_error("non-divisibility", str(e)))
        return EXIT_FAILED
    except ConvergenceError as e:
        _emit(_error("convergence", str(e)))
        return EXIT_FAILED
    except ValidationError as e:
        _emit(_error("parameter", str(e)))
        return EXIT_USAGE
    except QascValueError as e:
        _emit(_error("parameter", str(e)))
        return EXIT_USAGE
    qasc_logger.debug(f"Command {args.command} finished with exit code {code}.")
    _emit(payload)
    return code
