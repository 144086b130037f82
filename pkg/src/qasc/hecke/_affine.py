"""Demazure-Lustig operators, the affine shift omega, Y_i and q-Dunkl D_i.

All indices are 1-based. Operator words are written left to right and
applied to a concrete polynomial right to left.
"""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from qasc.algebra import Exponent, MPoly, ParamPoint
from qasc.utils import QascValueError

Letter = tuple[Literal["T", "omega"], int, bool]


def _check_range(name: str, i: int, low: int, high: int) -> None:
    if not low <= i <= high:
        raise QascValueError(f"{name} needs {low} <= i <= {high}, got {i}.")


def t_op(i: int, inverse: bool, f: MPoly, pt: ParamPoint) -> MPoly:
    """T_i f = t f + (t x_i - x_(i+1)) / (x_i - x_(i+1)) (s_i f - f).

    The inverse comes from the quadratic relation,
    T_i^-1 = t^-1 (T_i - t + 1).
    """
    n = f.nvars
    _check_range("T_i", i, 1, n - 1)
    t = pt.t
    left, right = MPoly.variable(n, i - 1), MPoly.variable(n, i)
    image = f.scale(t) - (left.scale(t) - right) * f.divided_difference(i - 1, i)
    if not inverse:
        return image
    return (image - f.scale(t - 1)).scale(1 / t)


def omega_op(f: MPoly, pt: ParamPoint, inverse: bool = False) -> MPoly:
    """omega = s_(n-1) ... s_1 tau_1, i.e. f(x) -> f(q x_n, x_1, ..., x_(n-1)).

    The inverse is f(x) -> f(x_2, ..., x_n, x_1 / q).
    """
    n = f.nvars
    q = pt.q

    def _forward(exp: Exponent) -> tuple[Exponent, Fraction]:
        return exp[1:] + exp[:1], q ** exp[0]

    def _backward(exp: Exponent) -> tuple[Exponent, Fraction]:
        return exp[n - 1 :] + exp[: n - 1], q ** (-exp[n - 1])

    return f.transform(_backward if inverse else _forward)


def apply_word(word: Sequence[Letter], f: MPoly, pt: ParamPoint) -> MPoly:
    """Apply a written word of T^(+-1) and omega^(+-1) letters right to left."""
    result = f
    for kind, index, inverse in reversed(word):
        if kind == "omega":
            result = omega_op(result, pt, inverse)
        else:
            result = t_op(index, inverse, result, pt)
    return result


def _y_word(i: int, n: int, inverse: bool) -> list[Letter]:
    if not inverse:
        return (
            [("T", j, False) for j in range(i, n)]
            + [("omega", 0, False)]
            + [("T", j, True) for j in range(1, i)]
        )
    return (
        [("T", j, False) for j in range(i - 1, 0, -1)]
        + [("omega", 0, True)]
        + [("T", j, True) for j in range(n - 1, i - 1, -1)]
    )


def y_op(i: int, inverse: bool, f: MPoly, pt: ParamPoint) -> MPoly:
    """Y_i = t^(i-n) T_i ... T_(n-1) omega T_1^-1 ... T_(i-1)^-1.

    Its inverse is t^(n-i) T_(i-1) ... T_1 omega^-1 T_(n-1)^-1 ... T_i^-1.
    """
    n = f.nvars
    _check_range("Y_i", i, 1, n)
    factor = pt.t ** (n - i) if inverse else pt.t ** (i - n)
    return apply_word(_y_word(i, n, inverse), f, pt).scale(factor)


def tij_inverse(i: int, j: int, f: MPoly, pt: ParamPoint) -> MPoly:
    """T_ij^-1 = T_i^-1 ... T_(j-2)^-1 T_(j-1)^-1 T_(j-2)^-1 ... T_i^-1, i < j."""
    n = f.nvars
    if not 1 <= i < j <= n:
        raise QascValueError(f"T_ij needs 1 <= i < j <= {n}, got ({i}, {j}).")
    word: list[Letter] = [("T", p, True) for p in range(i, j)]
    word += [("T", p, True) for p in range(j - 2, i - 1, -1)]
    return apply_word(word, f, pt)


@lru_cache(maxsize=8192)
def _dunkl_cached(i: int, f: MPoly, pt: ParamPoint) -> MPoly:
    n = f.nvars
    t = pt.t
    y = y_op(i, False, f, pt)
    bracket = y
    for j in range(i + 1, n + 1):
        term = tij_inverse(i, j, y, pt).scale((1 / t - 1) * t ** (j - i))
        bracket = bracket + term
    return (f - bracket.scale(t ** (n - 1))).divide_by_variable(i - 1)


def dunkl_d(i: int, f: MPoly, pt: ParamPoint) -> MPoly:
    """The q-Dunkl operator D_i.

    D_i = x_i^-1 (1 - t^(n-1) [1 + (t^-1 - 1) sum_(j>i) t^(j-i) T_ij^-1] Y_i).
    The operator lowers the degree of homogeneous input by one and kills
    constants. For n = 1 it reduces to x^-1 (1 - tau).

    Raises:
        NonDivisibilityError: If the bracket leaves a term without x_i, which
            would be an internal inconsistency.
    """
    pt.require_nvars(f.nvars)
    _check_range("D_i", i, 1, f.nvars)
    return _dunkl_cached(i, f, pt)


def dunkl_tilde(i: int, f: MPoly, pt: ParamPoint) -> MPoly:
    """D_i with q, t replaced by 1/q, 1/t."""
    return dunkl_d(i, f, pt.inverted())


def dunkl_alternative(i: int, f: MPoly, pt: ParamPoint) -> MPoly:
    """D_i = x_i^-1 (1 - t^(2n-i-1) I_i^-1 Y_i).

    I_i^-1 = T_i^-1 ... T_(n-1)^-1 T_(n-1)^-1 ... T_i^-1 collapses the
    T_ij sum of `dunkl_d`; used to cross-check it.
    """
    n = f.nvars
    _check_range("D_i", i, 1, n)
    word: list[Letter] = [("T", p, True) for p in range(i, n)]
    word += [("T", p, True) for p in range(n - 1, i - 1, -1)]
    inner = apply_word(word, y_op(i, False, f, pt), pt)
    return (f - inner.scale(pt.t ** (2 * n - i - 1))).divide_by_variable(i - 1)


def clear_dunkl_cache() -> None:
    """Drop cached Dunkl images."""
    _dunkl_cached.cache_clear()
