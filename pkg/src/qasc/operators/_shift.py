"""q-shifts and the Macdonald-type operators sum_i c_i(x) A_i(s) g_i."""

from collections.abc import Callable, Sequence
from fractions import Fraction
from functools import lru_cache

from qasc.algebra import MPoly, ParamPoint, vandermonde


def tau(f: MPoly, i: int, q: Fraction, inverse: bool = False) -> MPoly:
    """The q-shift x_i -> q x_i (or x_i -> x_i / q), 0-based i."""
    return f.scale_variable(i, 1 / q if inverse else q)


def q_partial(f: MPoly, i: int, q: Fraction) -> MPoly:
    """(f - tau_i f) / ((1 - q) x_i)."""
    return (f - tau(f, i, q)).divide_by_variable(i).scale(1 / (1 - q))


@lru_cache(maxsize=256)
def _vandermonde(n: int, m: int) -> MPoly:
    return vandermonde(m).embed(n)


@lru_cache(maxsize=1024)
def _a_numerator(n: int, m: int, i: int, s: Fraction) -> MPoly:
    # A_{i,m}(s) = _a_numerator / V_m with V_m = prod_{a<b<m} (x_a - x_b)
    xi = MPoly.variable(n, i)
    result = MPoly.constant(n, (-1) ** i)
    for p in range(m):
        if p != i:
            result = result * (xi.scale(s) - MPoly.variable(n, p))
    for a in range(m):
        for b in range(a + 1, m):
            if i not in (a, b):
                result = result * (MPoly.variable(n, a) - MPoly.variable(n, b))
    return result


def a_sum(pieces: Sequence[MPoly], s: Fraction) -> MPoly:
    """sum_i A_{i,m}(s) g_i over the first m = len(pieces) variables.

    A_{i,m}(s) = prod_{p<m, p!=i} (s x_i - x_p) / (x_i - x_p). The
    summands share the Vandermonde denominator of the first m variables,
    which is divided out once at the end. A remainder raises
    NonDivisibilityError; for the operators built here it means the input
    was not symmetric.
    """
    m = len(pieces)
    n = pieces[0].nvars
    numerator = MPoly.zero(n)
    for i, piece in enumerate(pieces):
        if not piece.is_zero():
            numerator = numerator + _a_numerator(n, m, i, s) * piece
    if m == 1:
        return numerator
    return numerator.exact_divide(_vandermonde(n, m))


def _sum_over_variables(
    f: MPoly, s: Fraction, piece: Callable[[int], MPoly]
) -> MPoly:
    return a_sum([piece(i) for i in range(f.nvars)], s)


def shift_sum(f: MPoly, k: int, inverse: bool, pt: ParamPoint) -> MPoly:
    """sum_p x_p^k A_p(t) tau_p f, or with t, tau_p inverted when `inverse`."""
    pt.require_nvars(f.nvars)
    s = 1 / pt.t if inverse else pt.t

    def _piece(i: int) -> MPoly:
        return MPoly.monomial(f.nvars, {i: k}) * tau(f, i, pt.q, inverse)

    return _sum_over_variables(f, s, _piece)


def m1(f: MPoly, pt: ParamPoint) -> MPoly:
    """The Macdonald operator M_1 = sum_i A_i(t) tau_i."""
    return shift_sum(f, 0, False, pt)


def m1_tilde(f: MPoly, pt: ParamPoint) -> MPoly:
    """M_1 at (1/q, 1/t): sum_i A_i(1/t) tau_i^-1."""
    return shift_sum(f, 0, True, pt)


def e_op(f: MPoly, k: int, pt: ParamPoint) -> MPoly:
    """E_k = sum_i x_i^k A_i(t) d/d_q x_i."""
    pt.require_nvars(f.nvars)

    def _piece(i: int) -> MPoly:
        return MPoly.monomial(f.nvars, {i: k}) * q_partial(f, i, pt.q)

    return _sum_over_variables(f, pt.t, _piece)


def b_op(f: MPoly, pt: ParamPoint) -> MPoly:
    """B = sum_i (1 - x_i)(1 - a x_i) A_i(t) d/d_q x_i."""
    pt.require_nvars(f.nvars)
    n = f.nvars

    def _piece(i: int) -> MPoly:
        xi = MPoly.variable(n, i)
        weight = (1 - xi) * (1 - xi.scale(pt.a))
        return weight * q_partial(f, i, pt.q)

    return _sum_over_variables(f, pt.t, _piece)
