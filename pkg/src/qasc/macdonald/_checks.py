"""Structural identities of the Macdonald polynomials."""

from fractions import Fraction

from qasc.algebra import MPoly, ParamPoint, elementary, schur, to_monomial_basis
from qasc.macdonald._macdonald import macdonald_P
from qasc.macdonald._pieri import (
    e0_action_P,
    expansion_to_mpoly,
    pieri_e1_P,
    pieri_er_P,
)
from qasc.operators import e_op, m1, m1_tilde
from qasc.partition import (
    eigenvalue,
    eigenvalue_tilde,
    partitions_up_to,
    principal_specialization,
    tdelta,
)
from qasc.utils import CheckReport, combine, exact_report

_HOMOGENEITY_SCALE = Fraction(2, 3)


def _params(pt: ParamPoint, degmax: int) -> dict[str, str]:
    return {**pt.as_params(), "degmax": str(degmax)}


def macdonald_property_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """Exact properties of P_kappa for all |kappa| <= degmax.

    Covers the monic leading term, both eigenvalue equations,
    self-duality, homogeneity, principal specialization and the Schur
    limit t = q.
    """
    n = pt.nvars
    params = _params(pt, degmax)
    inverted = pt.inverted()
    schur_point = pt.replace(t=pt.q)
    reports = []
    for kappa in partitions_up_to(degmax, n):
        tag = {"kappa": str(kappa)}
        p = macdonald_P(kappa, pt)
        expansion = to_monomial_basis(p)
        reports.append(
            exact_report("monic", params, expansion.get(kappa, Fraction(0)), 1, tag)
        )
        lower = [str(mu) for mu in expansion if not kappa.dominates(mu)]
        reports.append(exact_report("dominance-support", params, lower, [], tag))
        reports.append(
            exact_report(
                "M1-eigen", params, m1(p, pt), p.scale(eigenvalue(kappa, pt)), tag
            )
        )
        reports.append(
            exact_report(
                "M1-tilde-eigen",
                params,
                m1_tilde(p, pt),
                p.scale(eigenvalue_tilde(kappa, pt)),
                tag,
            )
        )
        reports.append(
            exact_report("self-duality", params, p, macdonald_P(kappa, inverted), tag)
        )
        scaled = p
        for i in range(n):
            scaled = scaled.scale_variable(i, _HOMOGENEITY_SCALE)
        reports.append(
            exact_report(
                "homogeneity",
                params,
                scaled,
                p.scale(_HOMOGENEITY_SCALE**kappa.size),
                tag,
            )
        )
        reports.append(
            exact_report(
                "principal-specialization",
                params,
                p.evaluate(tdelta(n, pt.t)),
                principal_specialization(kappa, pt),
                tag,
            )
        )
        reports.append(
            exact_report(
                "schur-limit",
                params,
                macdonald_P(kappa, schur_point),
                schur(kappa, n),
                tag,
            )
        )
    return combine("macdonald-properties", params, reports)


def pieri_checks(pt: ParamPoint, degmax: int) -> CheckReport:
    """e_1, e_r and E_0 on P_kappa against their P-basis expansions."""
    n = pt.nvars
    params = _params(pt, degmax)
    reports = []
    for kappa in partitions_up_to(degmax, n):
        tag = {"kappa": str(kappa)}
        p = macdonald_P(kappa, pt)
        e0_rhs = expansion_to_mpoly(e0_action_P(kappa, pt), pt)
        reports.append(exact_report("e0-on-p", params, e_op(p, 0, pt), e0_rhs, tag))
        if kappa.size < degmax:
            e1p = elementary(1, n) * p
            e1_rhs = expansion_to_mpoly(pieri_e1_P(kappa, pt), pt)
            reports.append(exact_report("e1-pieri", params, e1p, e1_rhs, tag))
            for r in range(2, n + 1):
                if kappa.size + r > degmax:
                    break
                reports.append(
                    exact_report(
                        "pieri-e_r",
                        params,
                        elementary(r, n) * p,
                        expansion_to_mpoly(pieri_er_P(kappa, r, pt), pt),
                        {**tag, "r": r},
                    )
                )
    return combine("macdonald-pieri", params, reports)


def positivity_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """Monomial coefficients of P_kappa are nonnegative for 0 < q, t < 1."""
    pt.require_unit_interval()
    params = _params(pt, degmax)
    negative = []
    for kappa in partitions_up_to(degmax, pt.nvars):
        poly: MPoly = macdonald_P(kappa, pt)
        if any(coef < 0 for coef in poly.terms.values()):
            negative.append(str(kappa))
    return exact_report("positivity", params, negative, [])
