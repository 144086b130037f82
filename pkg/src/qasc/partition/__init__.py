"""Partition combinatorics and (q, t) statistics."""

from qasc.partition._partition import Partition, partitions, partitions_up_to
from qasc.partition._statistics import (
    b_stat,
    binom_add,
    binom_remove,
    conjugate,
    eigenvalue,
    eigenvalue_tilde,
    hook_products,
    nodes,
    principal_specialization,
    psi_prime,
    tdelta,
    vertical_strips,
)

__all__ = [
    "Partition",
    "b_stat",
    "binom_add",
    "binom_remove",
    "conjugate",
    "eigenvalue",
    "eigenvalue_tilde",
    "hook_products",
    "nodes",
    "partitions",
    "partitions_up_to",
    "principal_specialization",
    "psi_prime",
    "tdelta",
    "vertical_strips",
]
