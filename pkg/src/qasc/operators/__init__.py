"""q-shift and Macdonald-type operators and the first eigenoperator form."""

from qasc.operators._checks import (
    b_operator_checks,
    commutator_checks,
    one_variable_eigen_check,
)
from qasc.operators._eigen import apply_h_form1, one_variable_op
from qasc.operators._linear_op import (
    LinearOp,
    OperatorKind,
    apply,
    e_k_op,
    h_form1,
    m1_op,
    m1_tilde_op,
    operator_b,
    tau_op,
)
from qasc.operators._shift import (
    a_sum,
    b_op,
    e_op,
    m1,
    m1_tilde,
    q_partial,
    shift_sum,
    tau,
)

__all__ = [
    "LinearOp",
    "OperatorKind",
    "a_sum",
    "apply",
    "apply_h_form1",
    "b_op",
    "b_operator_checks",
    "commutator_checks",
    "e_k_op",
    "e_op",
    "h_form1",
    "m1",
    "m1_op",
    "m1_tilde",
    "m1_tilde_op",
    "one_variable_eigen_check",
    "one_variable_op",
    "operator_b",
    "q_partial",
    "shift_sum",
    "tau",
    "tau_op",
]
