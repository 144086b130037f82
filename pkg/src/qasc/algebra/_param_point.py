"""Concrete rational parameter points (q, t, a) with a variable count."""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from qasc.algebra._rational import as_fraction, format_rational
from qasc.utils import ParameterError, QascValueError

_MAX_K = 64


class ParamPoint(BaseModel):
    """A rational assignment of the parameters q, t, a and the number of variables.

    All exact computations happen at such a point: identities are checked at
    several pseudorandom points instead of carrying rational functions in
    (q, t, a).
    """

    q: Fraction
    t: Fraction
    a: Fraction = Fraction(0)
    nvars: int = Field(ge=1)
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("q", "t", "a", mode="before")
    @classmethod
    def _parse(cls, value: Any) -> Fraction:
        return as_fraction(value)

    @field_validator("q")
    @classmethod
    def _check_q(cls, value: Fraction) -> Fraction:
        if value == 0 or value == 1:
            raise ValueError("q must be different from 0 and 1.")
        return value

    @field_validator("t")
    @classmethod
    def _check_t(cls, value: Fraction) -> Fraction:
        if value == 0:
            raise ValueError("t must be nonzero.")
        return value

    @field_serializer("q", "t", "a")
    def _serialize(self, value: Fraction) -> str:
        return format_rational(value)

    def __str__(self) -> str:
        """Compact human readable form."""
        return (
            f"q={format_rational(self.q)}, t={format_rational(self.t)}, "
            f"a={format_rational(self.a)}, n={self.nvars}"
        )

    def replace(self, **changes: Any) -> "ParamPoint":
        """Return a validated copy with some fields replaced."""
        data: dict[str, Any] = {"q": self.q, "t": self.t, "a": self.a}
        data["nvars"] = self.nvars
        data.update(changes)
        return ParamPoint(**data)

    def inverted(self) -> "ParamPoint":
        """The point (1/q, 1/t, a), used for the V family and self-duality."""
        return self.replace(q=1 / self.q, t=1 / self.t)

    def as_params(self) -> dict[str, str]:
        """String map used in reports."""
        return {
            "q": format_rational(self.q),
            "t": format_rational(self.t),
            "a": format_rational(self.a),
            "n": str(self.nvars),
        }

    # Preconditions of the individual modules

    def k_exponent(self) -> int | None:
        """Return k >= 1 with t == q**k, or None."""
        power = self.q
        for k in range(1, _MAX_K + 1):
            if power == self.t:
                return k
            power *= self.q
        return None

    def require_unit_interval(self) -> None:
        """Kernel and integral modules need 0 < q < 1 and 0 < t < 1."""
        if not (0 < self.q < 1 and 0 < self.t < 1):
            raise ParameterError(f"Expected 0 < q, t < 1, got {self}.")

    def require_negative_a(self) -> None:
        """The weight w_U and the domain [a, 1] need a < 0."""
        if not self.a < 0:
            raise ParameterError(f"Expected a < 0, got a={self.a}.")

    def require_k(self) -> int:
        """Return k for t = q^k, raising if t is not such a power."""
        k = self.k_exponent()
        if k is None:
            raise ParameterError(
                f"Expected t = q^k for a positive integer k, got {self}."
            )
        return k

    def require_t_equals_q(self) -> None:
        """Determinant formulas live on the Schur line t = q."""
        if self.t != self.q:
            raise ParameterError(f"Expected t = q, got {self}.")

    def require_nvars(self, nvars: int) -> None:
        """Check that a polynomial lives in the ring of this point."""
        if nvars != self.nvars:
            raise QascValueError(
                f"Polynomial has {nvars} variables but the parameter point has "
                f"n={self.nvars}."
            )
