"""Commutator form of the Al-Salam & Carlitz eigenoperator."""

from qasc.algebra import MPoly, ParamPoint
from qasc.operators._shift import e_op, m1_tilde, tau
from qasc.utils import QascValueError


def apply_h_form1(f: MPoly, pt: ParamPoint) -> MPoly:
    """H f with H = M~ - (1+a)[E_0, M~] + a[E_0, [E_0, M~]].

    The commutators are expanded as applications in both orders:
    [E_0, [E_0, M~]] = E_0 E_0 M~ - 2 E_0 M~ E_0 + M~ E_0 E_0.
    """
    a = pt.a
    mf = m1_tilde(f, pt)
    ef = e_op(f, 0, pt)
    emf = e_op(mf, 0, pt)
    mef = m1_tilde(ef, pt)
    result = mf - (emf - mef).scale(1 + a)
    if a != 0:
        eemf = e_op(emf, 0, pt)
        emef = e_op(mef, 0, pt)
        meef = m1_tilde(e_op(ef, 0, pt), pt)
        result = result + (eemf - emef.scale(2) + meef).scale(a)
    return result


def _d_one(f: MPoly, pt: ParamPoint) -> MPoly:
    return (f - tau(f, 0, pt.q)).divide_by_variable(0)


def one_variable_op(f: MPoly, pt: ParamPoint) -> MPoly:
    """(1 - (1+a) D + a D^2) tau^-1 with D = x^-1 (1 - tau), one variable."""
    if f.nvars != 1:
        raise QascValueError(f"Expected a one-variable polynomial, got {f.nvars}.")
    g = tau(f, 0, pt.q, inverse=True)
    dg = _d_one(g, pt)
    return g - dg.scale(1 + pt.a) + _d_one(dg, pt).scale(pt.a)
