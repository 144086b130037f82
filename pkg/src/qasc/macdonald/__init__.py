"""Symmetric Macdonald polynomials, Pieri rules and generalized binomials."""

from qasc.macdonald._checks import (
    macdonald_property_check,
    pieri_checks,
    positivity_check,
)
from qasc.macdonald._macdonald import (
    clear_macdonald_cache,
    from_macdonald_basis,
    macdonald_P,
    to_macdonald_basis,
)
from qasc.macdonald._pieri import (
    Expansion,
    e0_action_P,
    expansion_to_mpoly,
    lassalle_binomials,
    lassalle_expansion_check,
    pieri_e1_P,
    pieri_er_P,
    vertical_strips_up,
)

__all__ = [
    "Expansion",
    "clear_macdonald_cache",
    "e0_action_P",
    "expansion_to_mpoly",
    "from_macdonald_basis",
    "lassalle_binomials",
    "lassalle_expansion_check",
    "macdonald_P",
    "macdonald_property_check",
    "pieri_checks",
    "pieri_e1_P",
    "pieri_er_P",
    "positivity_check",
    "to_macdonald_basis",
    "vertical_strips_up",
]
