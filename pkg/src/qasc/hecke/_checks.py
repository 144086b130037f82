"""Relations of the affine Hecke operators and of the Dunkl operators."""

from collections.abc import Iterator
from fractions import Fraction
from itertools import product

from qasc.algebra import (
    MPoly,
    ParamPoint,
    elementary,
    monomial_basis,
    sample_point,
)
from qasc.hecke._affine import (
    dunkl_alternative,
    dunkl_d,
    omega_op,
    t_op,
    y_op,
)
from qasc.hecke._forms import h_form2, m1tilde_partial, m1tilde_via_y
from qasc.hecke._pairing import (
    apply_dunkl_polynomial,
    binomial_from_pairing,
    dunkl_pairing,
    pairing_norm,
)
from qasc.kernels import truncated_kernel
from qasc.macdonald import lassalle_binomials, macdonald_P
from qasc.operators import apply_h_form1, e_op, m1_tilde
from qasc.partition import partitions, partitions_up_to
from qasc.utils import CheckReport, combine, exact_report


def _params(pt: ParamPoint, degmax: int) -> dict[str, str]:
    return {**pt.as_params(), "degmax": str(degmax)}


def _monomials(n: int, degmax: int) -> Iterator[tuple[str, MPoly]]:
    for exp in product(range(degmax + 1), repeat=n):
        if sum(exp) <= degmax:
            yield str(exp), MPoly.monomial(n, dict(enumerate(exp)))


def _t_relations(
    f: MPoly, pt: ParamPoint, params: dict[str, str], tag: dict[str, str]
) -> list[CheckReport]:
    n, t = f.nvars, pt.t
    reports = []
    for i in range(1, n):
        itag = {**tag, "i": str(i)}
        xi, xj = MPoly.variable(n, i - 1), MPoly.variable(n, i)
        tf = t_op(i, False, f, pt)
        tinv = t_op(i, True, f, pt)
        g = tf + f
        quadratic = t_op(i, False, g, pt) - g.scale(t)
        reports.append(
            exact_report("quadratic", params, quadratic, MPoly.zero(n), itag)
        )
        reports.append(
            exact_report("T-inverse", params, t_op(i, False, tinv, pt), f, itag)
        )
        reports.append(
            exact_report(
                "Tinv-x(i+1)",
                params,
                t_op(i, True, xj * f, pt),
                (xi * tf).scale(1 / t),
                itag,
            )
        )
        reports.append(
            exact_report(
                "Tinv-x(i)",
                params,
                t_op(i, True, xi * f, pt),
                xj * tinv + (xi * f).scale(1 / t - 1),
                itag,
            )
        )
        reports.append(
            exact_report(
                "T-x(i)",
                params,
                t_op(i, False, xi * f, pt),
                (xj * tinv).scale(t),
                itag,
            )
        )
        reports.append(
            exact_report(
                "T-x(i+1)",
                params,
                t_op(i, False, xj * f, pt),
                xi * tf + (xj * f).scale(t - 1),
                itag,
            )
        )
        if i + 1 < n:
            left = t_op(i, False, t_op(i + 1, False, tf, pt), pt)
            inner = t_op(i, False, t_op(i + 1, False, f, pt), pt)
            right = t_op(i + 1, False, inner, pt)
            reports.append(exact_report("braid", params, left, right, itag))
    return reports


def _omega_relations(
    f: MPoly, pt: ParamPoint, params: dict[str, str], tag: dict[str, str]
) -> list[CheckReport]:
    n = f.nvars
    wf = omega_op(f, pt)
    x1 = MPoly.variable(n, 0)
    xn = MPoly.variable(n, n - 1)
    reports = [
        exact_report("omega-inverse", params, omega_op(wf, pt, inverse=True), f, tag),
        exact_report(
            "omega-x1", params, omega_op(x1 * f, pt), (xn * wf).scale(pt.q), tag
        ),
    ]
    for i in range(1, n):
        shifted = omega_op(MPoly.variable(n, i) * f, pt)
        reports.append(
            exact_report(
                "omega-x(i+1)",
                params,
                shifted,
                MPoly.variable(n, i - 1) * wf,
                {**tag, "i": str(i)},
            )
        )
    return reports


def _y_relations(
    f: MPoly, pt: ParamPoint, params: dict[str, str], tag: dict[str, str]
) -> list[CheckReport]:
    n = f.nvars
    ys = {i: y_op(i, False, f, pt) for i in range(1, n + 1)}
    reports = []
    for i in range(1, n + 1):
        itag = {**tag, "i": str(i)}
        reports.append(
            exact_report("Y-inverse", params, y_op(i, True, ys[i], pt), f, itag)
        )
        for j in range(i + 1, n + 1):
            reports.append(
                exact_report(
                    "Y-commute",
                    params,
                    y_op(i, False, ys[j], pt),
                    y_op(j, False, ys[i], pt),
                    {**itag, "j": str(j)},
                )
            )
    for i in range(1, n):
        itag = {**tag, "i": str(i)}
        lhs = t_op(i, False, y_op(i + 1, False, t_op(i, False, f, pt), pt), pt)
        reports.append(exact_report("t-y-shift", params, lhs, ys[i].scale(pt.t), itag))
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            reports.append(
                exact_report(
                    "T-Y-commute",
                    params,
                    t_op(i, False, ys[j], pt),
                    y_op(j, False, t_op(i, False, f, pt), pt),
                    {**itag, "j": str(j)},
                )
            )
    for i in range(1, n + 1):
        reports.append(
            exact_report(
                "dunkl-forms",
                params,
                dunkl_d(i, f, pt),
                dunkl_alternative(i, f, pt),
                {**tag, "i": str(i)},
            )
        )
    return reports


def hecke_relation_checks(pt: ParamPoint, degmax: int = 3) -> CheckReport:
    """Defining relations on every monomial of degree <= degmax.

    Covers the quadratic and braid relations of T_i, the four commutation
    rules with x_i, x_(i+1), the omega rules, T_i Y_(i+1) T_i = t Y_i, the
    mutual commutation of the Y_i, both forms of D_i and D_i 1 = 0.
    """
    n = pt.nvars
    params = _params(pt, degmax)
    reports = []
    for label, f in _monomials(n, degmax):
        tag = {"f": label}
        reports += _t_relations(f, pt, params, tag)
        reports += _omega_relations(f, pt, params, tag)
        reports += _y_relations(f, pt, params, tag)
    one = MPoly.one(n)
    for i in range(1, n + 1):
        reports.append(
            exact_report(
                "D-constant", params, dunkl_d(i, one, pt), MPoly.zero(n), {"i": str(i)}
            )
        )
    return combine("hecke-relations", params, reports)


def dunkl_sum_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """On symmetric f: sum_i D_i = (1-q) E_0 and M~_1 = t^(1-n) sum_i Y_i^-1."""
    n = pt.nvars
    params = _params(pt, degmax)
    reports = []
    for lam, f in monomial_basis(n, degmax):
        tag = {"basis": str(lam)}
        total = MPoly.zero(n)
        for i in range(1, n + 1):
            total = total + dunkl_d(i, f, pt)
        e0 = e_op(f, 0, pt).scale(1 - pt.q)
        reports.append(exact_report("dunkl-sum", params, total, e0, tag))
        reports.append(
            exact_report(
                "m1-tilde-y", params, m1_tilde(f, pt), m1tilde_via_y(f, pt), tag
            )
        )
    return combine("dunkl-sums", params, reports)


def partial_m1_tilde_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """M~_1^(m) = t^(1-m) sum_(i<=m) Y_i^-1 on symmetric f, m = 1..n."""
    n = pt.nvars
    params = _params(pt, degmax)
    reports = [
        exact_report(
            "partial-m1-tilde",
            params,
            m1tilde_partial(m, f, pt),
            m1tilde_via_y(f, pt, m),
            {"basis": str(lam), "m": str(m)},
        )
        for lam, f in monomial_basis(n, degmax)
        for m in range(1, n + 1)
    ]
    return combine("partial-m1-tilde-sums", params, reports)


def e0_commutator_checks(pt: ParamPoint, degmax: int) -> CheckReport:
    """[E_0, M~_1] and [E_0, [E_0, M~_1]] in Y/D form on symmetric f."""
    n, t = pt.nvars, pt.t
    params = _params(pt, degmax)
    reports = []
    for lam, f in monomial_basis(n, degmax):
        tag = {"basis": str(lam)}
        mf = m1_tilde(f, pt)
        ef = e_op(f, 0, pt)
        emf = e_op(mf, 0, pt)
        mef = m1_tilde(ef, pt)
        single = emf - mef
        double = e_op(emf, 0, pt) - e_op(mef, 0, pt).scale(2) + m1_tilde(
            e_op(ef, 0, pt), pt
        )
        rhs1 = MPoly.zero(n)
        rhs2 = MPoly.zero(n)
        for i in range(1, n + 1):
            weight = t ** (1 - i)
            d_i = dunkl_d(i, y_op(i, True, f, pt), pt)
            rhs1 = rhs1 + d_i.scale(weight)
            rhs2 = rhs2 + dunkl_d(i, d_i, pt).scale(weight)
            for j in range(i + 1, n + 1):
                rhs2 = rhs2 + dunkl_d(j, d_i, pt).scale((1 - 1 / t) * weight)
        reports += [
            exact_report("e0-m1-tilde-commutator", params, single, rhs1, tag),
            exact_report("e0-m1-tilde-double-commutator", params, double, rhs2, tag),
        ]
    return combine("e0-m1-tilde-commutators", params, reports)


def form2_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """Both forms of the eigenoperator agree on symmetric f."""
    params = _params(pt, degmax)
    reports = [
        exact_report(
            "form2", params, apply_h_form1(f, pt), h_form2(f, pt), {"basis": str(lam)}
        )
        for lam, f in monomial_basis(pt.nvars, degmax)
    ]
    return combine("eigenoperator-forms", params, reports)


def kernel_eigen_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """e_r(D^(x)) 0F0(x; y) = e_r(y) 0F0(x; y) through x-degree degmax - r.

    y is fixed at a rational point, so 0F0 is a polynomial in x.
    """
    n = pt.nvars
    params = _params(pt, degmax)
    y = sample_point(n)
    kernel = truncated_kernel("F", pt, degmax).in_x(y)
    reports = []
    for r in range(1, min(n, degmax) + 1):
        e_r = elementary(r, n)
        lhs = apply_dunkl_polynomial(e_r, kernel, pt)
        rhs = kernel.scale(e_r.evaluate(y))
        reports.append(
            exact_report(
                "dunkl-kernel-eigen",
                params,
                lhs.truncate(degmax - r),
                rhs.truncate(degmax - r),
                {"r": str(r)},
            )
        )
    return combine("kernel-eigen", params, reports, {"y": [str(v) for v in y]})


def dunkl_pairing_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """[P_kappa, P_sigma] = delta t^-b(kappa) h'_kappa P_kappa(t^delta)."""
    n = pt.nvars
    params = _params(pt, degmax)
    reports = []
    for size in range(degmax + 1):
        shapes = partitions(size, n)
        for kappa in shapes:
            p_kappa = macdonald_P(kappa, pt)
            for sigma in shapes:
                expected = pairing_norm(kappa, pt) if kappa == sigma else Fraction(0)
                reports.append(
                    exact_report(
                        "p-pairing",
                        params,
                        dunkl_pairing(p_kappa, macdonald_P(sigma, pt), pt),
                        expected,
                        {"kappa": str(kappa), "sigma": str(sigma)},
                    )
                )
    return combine("dunkl-pairing", params, reports)


def pairing_binomial_check(pt: ParamPoint, degmax: int) -> CheckReport:
    """Binomials from the Dunkl pairing against the series definition."""
    n = pt.nvars
    params = _params(pt, degmax)
    reports = []
    for mu in partitions_up_to(degmax, n):
        series = lassalle_binomials(mu, pt, degmax)
        for lam in partitions_up_to(degmax, n):
            if lam.size < mu.size or not lam.contains(mu):
                continue
            reports.append(
                exact_report(
                    "pairing-binomial",
                    params,
                    binomial_from_pairing(lam, mu, pt),
                    series.get(lam, Fraction(0)),
                    {"lambda": str(lam), "mu": str(mu)},
                )
            )
    return combine("pairing-binomials", params, reports)
