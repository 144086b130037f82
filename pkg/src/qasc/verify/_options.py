"""Knobs shared by all verification suites."""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from qasc.algebra import ParamPoint, as_fraction
from qasc.utils import ParameterError
from qasc.verify._points import random_param_points


class SuiteOptions(BaseModel):
    """Options of a verification run.

    If `q` is given the suites run at the single point it defines, with
    `t` defaulting to q^k and `a` to -1. Otherwise `points` seeded random
    points are drawn.
    """

    n: int = Field(default=2, ge=1)
    k: int = Field(default=1, ge=1)
    degmax: int = Field(default=2, ge=0)
    seed: int = 0
    points: int = Field(default=5, ge=1)
    precision: int | None = Field(default=None, ge=10)
    q: Fraction | None = None
    t: Fraction | None = None
    a: Fraction | None = None
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("q", "t", "a", mode="before")
    @classmethod
    def _parse(cls, value: Any) -> Fraction | None:
        return None if value is None else as_fraction(value)

    def _fixed_point(self, t: Fraction) -> ParamPoint:
        assert self.q is not None
        a = Fraction(-1) if self.a is None else self.a
        return ParamPoint(q=self.q, t=t, a=a, nvars=self.n)

    def generic_points(self) -> list[ParamPoint]:
        """Points for the exact identities, with t unrelated to q."""
        if self.q is not None:
            t = self.q**self.k if self.t is None else self.t
            return [self._fixed_point(t)]
        return random_param_points(self.seed, self.points, self.n, self.degmax)

    def lattice_points(self, k: int | None = None) -> list[ParamPoint]:
        """Points with t = q^k for the Jackson integrals.

        Args:
            k: Overrides the configured exponent, e.g. k=1 on the Schur line.

        Raises:
            ParameterError: If a fixed t contradicts t = q^k.
        """
        k = self.k if k is None else k
        if self.q is not None:
            t = self.q**k
            if self.t is not None and self.t != t:
                raise ParameterError(f"Expected t = q^{k}, got q={self.q}, t={self.t}.")
            return [self._fixed_point(t)]
        return random_param_points(self.seed, self.points, self.n, self.degmax, k=k)
