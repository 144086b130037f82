"""Truncated hypergeometric kernels 0F0 and 0psi0."""

from qasc.kernels._checks import (
    inversion_relation_check,
    kernel_specialization_checks,
    lassalle_e0_check,
)
from qasc.kernels._kernel import (
    KernelKind,
    TruncatedKernel,
    f00,
    kernel_coefficient,
    kernel_tail_bound,
    psi00,
    truncated_kernel,
)

__all__ = [
    "KernelKind",
    "TruncatedKernel",
    "f00",
    "inversion_relation_check",
    "kernel_coefficient",
    "kernel_specialization_checks",
    "kernel_tail_bound",
    "lassalle_e0_check",
    "psi00",
    "truncated_kernel",
]
