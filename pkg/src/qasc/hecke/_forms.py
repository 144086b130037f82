"""Eigenoperators written through Y_i^-1 and the Dunkl operators."""

from qasc.algebra import MPoly, ParamPoint
from qasc.hecke._affine import dunkl_d, y_op
from qasc.operators import a_sum, tau
from qasc.utils import QascValueError


def m1tilde_partial(m: int, f: MPoly, pt: ParamPoint) -> MPoly:
    """sum_(i<=m) A_(i,m)(1/t) tau_i^-1 f, the A-products over x_1..x_m only."""
    if not 1 <= m <= f.nvars:
        raise QascValueError(f"m must satisfy 1 <= m <= {f.nvars}, got {m}.")
    pieces = [tau(f, i, pt.q, inverse=True) for i in range(m)]
    return a_sum(pieces, 1 / pt.t)


def m1tilde_via_y(f: MPoly, pt: ParamPoint, m: int | None = None) -> MPoly:
    """t^(1-m) sum_(i<=m) Y_i^-1 f, by default with m = n.

    On symmetric f this is M~_1 restricted to the first m variables.
    """
    m = f.nvars if m is None else m
    total = MPoly.zero(f.nvars)
    for i in range(1, m + 1):
        total = total + y_op(i, True, f, pt)
    return total.scale(pt.t ** (1 - m))


def h_form2(f: MPoly, pt: ParamPoint) -> MPoly:
    """The eigenoperator in Y/D form.

    H = t^(1-n) sum Y_i^-1 - (1+a) sum t^(1-i) D_i Y_i^-1
        + a sum t^(1-i) D_i^2 Y_i^-1
        + a (1 - 1/t) sum_(i<j) t^(1-i) D_j D_i Y_i^-1.
    """
    pt.require_nvars(f.nvars)
    n, t, a = f.nvars, pt.t, pt.a
    y_inv = {i: y_op(i, True, f, pt) for i in range(1, n + 1)}
    d_once = {i: dunkl_d(i, y_inv[i], pt) for i in range(1, n + 1)}
    result = MPoly.zero(n)
    for i in range(1, n + 1):
        weight = t ** (1 - i)
        result = result + y_inv[i].scale(t ** (1 - n))
        result = result - d_once[i].scale((1 + a) * weight)
    if a == 0:
        return result
    for i in range(1, n + 1):
        weight = t ** (1 - i)
        result = result + dunkl_d(i, d_once[i], pt).scale(a * weight)
        for j in range(i + 1, n + 1):
            cross = dunkl_d(j, d_once[i], pt)
            result = result + cross.scale(a * (1 - 1 / t) * weight)
    return result
