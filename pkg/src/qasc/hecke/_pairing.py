"""Symmetric functions of the Dunkl operators and the Dunkl pairing."""

from collections.abc import Callable
from fractions import Fraction
from itertools import permutations

from qasc.algebra import MPoly, ParamPoint, to_monomial_basis
from qasc.hecke._affine import dunkl_d, dunkl_tilde
from qasc.macdonald import macdonald_P
from qasc.partition import Partition, hook_products, principal_specialization
from qasc.utils import NotSymmetricError, QascError, QascValueError, qasc_logger

DunklFn = Callable[[int, MPoly, ParamPoint], MPoly]

_COMMUTATION_CHECK_DEGREE = 3


def _apply_monomial(
    exponents: tuple[int, ...], f: MPoly, pt: ParamPoint, dunkl: DunklFn
) -> MPoly:
    result = f
    for i, power in enumerate(exponents, start=1):
        for _ in range(power):
            if result.is_zero():
                return result
            result = dunkl(i, result, pt)
    return result


def check_dunkl_commutation(f: MPoly, pt: ParamPoint, tilde: bool = False) -> None:
    """Raise unless D_i D_j f = D_j D_i f for all i < j."""
    dunkl = dunkl_tilde if tilde else dunkl_d
    n = f.nvars
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            left = dunkl(i, dunkl(j, f, pt), pt)
            right = dunkl(j, dunkl(i, f, pt), pt)
            if left != right:
                raise QascError(f"D_{i} and D_{j} do not commute on {f} at {pt}.")


def apply_dunkl_polynomial(
    p: MPoly, f: MPoly, pt: ParamPoint, tilde: bool = False
) -> MPoly:
    """p(D_1, ..., D_n) f for a symmetric polynomial p.

    p is expanded in monomial symmetric functions and each m_lambda(D) is
    the sum of D^alpha over the distinct permutations alpha of lambda.
    Commutation of the D_i is verified on f when deg f <= 3.

    Args:
        p: The symmetric polynomial to realize in the Dunkl operators.
        f: The polynomial acted on.
        pt: The parameter point.
        tilde: Use the operators at (1/q, 1/t) instead.
    """
    pt.require_nvars(p.nvars)
    pt.require_nvars(f.nvars)
    if not p.is_symmetric():
        raise NotSymmetricError(f"{p} is not symmetric.")
    if f.degree() <= _COMMUTATION_CHECK_DEGREE:
        check_dunkl_commutation(f, pt, tilde)
    dunkl = dunkl_tilde if tilde else dunkl_d
    n = f.nvars
    top = f.degree()
    result = MPoly.zero(n)
    for lam, coef in to_monomial_basis(p).items():
        if lam.size > top:
            continue
        for alpha in sorted(set(permutations(lam.padded(n)))):
            result = result + _apply_monomial(alpha, f, pt, dunkl).scale(coef)
    return result


def dunkl_pairing(p: MPoly, r: MPoly, pt: ParamPoint) -> Fraction:
    """[p, r] = p(D) r at x = 0, for symmetric p and r."""
    if not r.is_symmetric():
        raise NotSymmetricError(f"{r} is not symmetric.")
    return apply_dunkl_polynomial(p, r, pt).constant_term()


def pairing_norm(kappa: Partition, pt: ParamPoint) -> Fraction:
    """[P_kappa, P_kappa] = t^-b(kappa) h'_kappa P_kappa(t^delta)."""
    _, h_prime = hook_products(kappa, pt)
    return pt.t ** (-kappa.b()) * h_prime * principal_specialization(kappa, pt)


def binomial_from_pairing(lam: Partition, mu: Partition, pt: ParamPoint) -> Fraction:
    """The generalized binomial (lambda over mu) from P_mu(D) V_lambda^(0) at 0.

    The pairing is multiplied by
    (-1)^(|lambda|-|mu|) q^(b(lambda')-b(mu')) t^((n-1)(|lambda|-|mu|))
    t^(2b(mu)-b(lambda)) / (P_lambda(t^delta) h'_mu).
    """
    # asc builds on this module, so the V family is imported on use
    from qasc.asc import asc_v

    if mu.size > lam.size:
        raise QascValueError(f"|mu| must not exceed |lambda|, got {mu} and {lam}.")
    n = pt.nvars
    base = pt.replace(a=0)
    v_lambda = asc_v(lam, base).poly
    pairing = dunkl_pairing(macdonald_P(mu, pt), v_lambda, pt)
    diff = lam.size - mu.size
    _, h_mu = hook_products(mu, pt)
    prefactor = (
        (-1) ** diff
        * pt.q ** (lam.conjugate().b() - mu.conjugate().b())
        * pt.t ** ((n - 1) * diff + 2 * mu.b() - lam.b())
        / (principal_specialization(lam, pt) * h_mu)
    )
    qasc_logger.debug(f"Pairing binomial ({lam} over {mu}) at {pt}.")
    return Fraction(prefactor) * pairing
