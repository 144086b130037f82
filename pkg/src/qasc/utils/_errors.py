# Generic error classes for the qasc package


class QascError(Exception):
    """Base class for all errors in the qasc package."""

    pass


class QascValueError(QascError, ValueError):
    """Error raised when a value does not pass a run time test."""

    pass


class QascTypeError(QascError, TypeError):
    """Error raised when two operands cannot be combined."""

    pass


class NonDivisibilityError(QascValueError):
    """Error raised when an exact polynomial division leaves a remainder."""

    pass


class NotSymmetricError(QascValueError):
    """Error raised when a symmetric polynomial was required."""

    pass


class ParameterError(QascValueError):
    """Error raised when a parameter point violates a precondition."""

    pass


class ResonanceError(QascError, ArithmeticError):
    """Error raised when two eigenvalues coincide at the chosen parameters.

    The clashing pair of partitions is stored in `pair`.
    """

    def __init__(self, message: str, pair: tuple[object, object] | None = None):
        """Initialize the error with an optional pair of clashing labels."""
        super().__init__(message)
        self.pair = pair


class ConvergenceError(QascError, ArithmeticError):
    """Error raised when a truncated series or lattice sum does not converge."""

    pass
