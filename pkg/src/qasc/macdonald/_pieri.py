"""Pieri-type expansions and generalized binomial coefficients in the P-basis."""

from fractions import Fraction
from itertools import combinations

from qasc.algebra import MPoly, ParamPoint, diagonal_product
from qasc.macdonald._macdonald import macdonald_P, to_macdonald_basis
from qasc.partition import (
    Partition,
    binom_add,
    binom_remove,
    hook_products,
    nodes,
    principal_specialization,
    psi_prime,
)
from qasc.qseries import e_q_coefficients
from qasc.utils import CheckReport, QascValueError, combine, exact_report

Expansion = list[tuple[Partition, Fraction]]


def _h_prime(lam: Partition, pt: ParamPoint) -> Fraction:
    return hook_products(lam, pt)[1]


def pieri_e1_P(kappa: Partition, pt: ParamPoint) -> Expansion:
    """Coefficients of e_1 P_kappa in the P-basis.

    The coefficient of P_kappa^(i) is
    (1-q) t^(i-1) (kappa^(i) over kappa) h'_kappa / h'_kappa^(i).
    """
    addable, _ = nodes(kappa, pt.nvars)
    h_kappa = _h_prime(kappa, pt)
    result = []
    for i in addable:
        lam = kappa.add_node(i)
        coef = (1 - pt.q) * pt.t ** (i - 1) * binom_add(kappa, i, pt)
        result.append((lam, coef * h_kappa / _h_prime(lam, pt)))
    return result


def e0_action_P(kappa: Partition, pt: ParamPoint) -> Expansion:
    """Coefficients of E_0 P_kappa, one per removable row i.

    The coefficient of P_kappa_(i) is
    (kappa over kappa_(i)) P_kappa(t^delta) / P_kappa_(i)(t^delta).
    """
    _, removable = nodes(kappa, pt.nvars)
    top = principal_specialization(kappa, pt)
    result = []
    for i in removable:
        mu = kappa.remove_node(i)
        coef = binom_remove(kappa, i, pt) * top / principal_specialization(mu, pt)
        result.append((mu, coef))
    return result


def vertical_strips_up(mu: Partition, r: int, n: int) -> list[Partition]:
    """All lambda of length <= n with lambda/mu a vertical r-strip."""
    if not 0 <= r <= n:
        raise QascValueError(f"r must satisfy 0 <= r <= n={n}, got {r}.")
    found = []
    for rows in combinations(range(n), r):
        values = list(mu.padded(n))
        for i in rows:
            values[i] += 1
        if all(a >= b for a, b in zip(values, values[1:], strict=False)):
            found.append(Partition(values))
    return sorted(found)


def pieri_er_P(kappa: Partition, r: int, pt: ParamPoint) -> Expansion:
    """e_r P_kappa = sum psi'_(lambda/kappa) P_lambda over vertical r-strips."""
    return [
        (lam, psi_prime(lam, kappa, pt))
        for lam in vertical_strips_up(kappa, r, pt.nvars)
    ]


def expansion_to_mpoly(expansion: Expansion, pt: ParamPoint) -> MPoly:
    """sum c_lambda P_lambda for an expansion list."""
    result = MPoly.zero(pt.nvars)
    for lam, coef in expansion:
        result = result + macdonald_P(lam, pt).scale(coef)
    return result


def lassalle_binomials(
    mu: Partition, pt: ParamPoint, degmax: int
) -> dict[Partition, Fraction]:
    """Binomials (lambda over mu) for |lambda| <= degmax.

    Read off the P-expansion of the truncated series of
    P_mu(x) prod_i 1 / (x_i;q)_inf.
    """
    product = diagonal_product(e_q_coefficients(pt.q, degmax), pt.nvars, degmax)
    series = (macdonald_P(mu, pt) * product).truncate(degmax)
    h_mu = _h_prime(mu, pt)
    return {
        lam: coef * pt.t ** (mu.b() - lam.b()) * _h_prime(lam, pt) / h_mu
        for lam, coef in to_macdonald_basis(series, pt).items()
    }


def lassalle_expansion_check(mu: Partition, pt: ParamPoint, degmax: int) -> CheckReport:
    """Binomials from the series of P_mu prod 1/(x_i;q)_inf.

    The diagonal binomial is 1, the support lies above mu and the binomials
    with one extra node agree with their product formula.
    """
    params = {**pt.as_params(), "mu": str(mu), "degmax": str(degmax)}
    binomials = lassalle_binomials(mu, pt, degmax)
    reports = []
    if mu.size <= degmax:
        reports.append(
            exact_report("lassalle-diagonal", params, binomials.get(mu, Fraction(0)), 1)
        )
    outside = sorted(str(lam) for lam in binomials if not lam.contains(mu))
    reports.append(exact_report("lassalle-support", params, outside, []))
    if mu.size + 1 <= degmax:
        addable, _ = nodes(mu, pt.nvars)
        for i in addable:
            lam = mu.add_node(i)
            reports.append(
                exact_report(
                    "lassalle-one-node",
                    params,
                    binomials.get(lam, Fraction(0)),
                    binom_add(mu, i, pt),
                    {"lambda": str(lam)},
                )
            )
    details = {str(lam): str(value) for lam, value in sorted(binomials.items())}
    return combine("lassalle", params, reports, {"binomials": details})
