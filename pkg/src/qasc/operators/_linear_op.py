"""Finite operator descriptors acting on MPoly."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qasc.algebra import MPoly, ParamPoint
from qasc.operators._eigen import apply_h_form1
from qasc.operators._shift import b_op, e_op, m1, m1_tilde, tau
from qasc.utils import QascValueError

OperatorKind = Literal["tau", "M1", "M1_tilde", "E", "H_form1", "B"]


class LinearOp(BaseModel):
    """Descriptor of a q-shift or Macdonald-type operator.

    `index` is the 1-based variable of a q-shift, or k for E_k.
    """

    kind: OperatorKind
    pt: ParamPoint
    index: int = Field(default=0, ge=0)
    inverse: bool = False
    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_index(self) -> "LinearOp":
        if self.kind == "tau" and not 1 <= self.index <= self.pt.nvars:
            raise ValueError(
                f"tau needs 1 <= i <= n={self.pt.nvars}, got {self.index}."
            )
        if self.kind == "E" and self.index > 2:
            raise ValueError(f"E_k is defined for k in 0, 1, 2, got {self.index}.")
        return self

    @property
    def nvars(self) -> int:
        """Number of variables the operator acts on."""
        return self.pt.nvars

    def apply(self, f: MPoly) -> MPoly:
        """Exact image of f."""
        self.pt.require_nvars(f.nvars)
        match self.kind:
            case "tau":
                return tau(f, self.index - 1, self.pt.q, self.inverse)
            case "M1":
                return m1(f, self.pt)
            case "M1_tilde":
                return m1_tilde(f, self.pt)
            case "E":
                return e_op(f, self.index, self.pt)
            case "H_form1":
                return apply_h_form1(f, self.pt)
            case "B":
                return b_op(f, self.pt)
        raise QascValueError(f"Unknown operator kind {self.kind}.")

    def __call__(self, f: MPoly) -> MPoly:
        """Same as `apply`."""
        return self.apply(f)


def apply(op: LinearOp, f: MPoly) -> MPoly:
    """Apply an operator descriptor to a polynomial."""
    return op.apply(f)


def tau_op(i: int, pt: ParamPoint, inverse: bool = False) -> LinearOp:
    """The q-shift of the i-th variable (1-based)."""
    return LinearOp(kind="tau", pt=pt, index=i, inverse=inverse)


def m1_op(pt: ParamPoint) -> LinearOp:
    """The first Macdonald operator."""
    return LinearOp(kind="M1", pt=pt)


def m1_tilde_op(pt: ParamPoint) -> LinearOp:
    """M_1 with q, t inverted."""
    return LinearOp(kind="M1_tilde", pt=pt)


def e_k_op(k: int, pt: ParamPoint) -> LinearOp:
    """E_k for k in 0, 1, 2."""
    return LinearOp(kind="E", pt=pt, index=k)


def h_form1(pt: ParamPoint) -> LinearOp:
    """The eigenoperator in commutator form."""
    return LinearOp(kind="H_form1", pt=pt)


def operator_b(pt: ParamPoint) -> LinearOp:
    """The operator B of the Pieri formula for U."""
    return LinearOp(kind="B", pt=pt)
