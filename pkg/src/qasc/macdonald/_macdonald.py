"""Symmetric Macdonald polynomials by a triangular eigen-solve."""

from fractions import Fraction
from functools import lru_cache

from qasc.algebra import (
    MPoly,
    ParamPoint,
    monomial_symmetric,
    to_monomial_basis,
)
from qasc.operators import m1
from qasc.partition import Partition, eigenvalue, partitions
from qasc.utils import QascValueError, ResonanceError, qasc_logger


@lru_cache(maxsize=2048)
def _m1_on_monomial(
    mu: Partition, n: int, q: Fraction, t: Fraction
) -> dict[Partition, Fraction]:
    pt = ParamPoint(q=q, t=t, nvars=n)
    return to_monomial_basis(m1(monomial_symmetric(mu, n), pt))


@lru_cache(maxsize=1024)
def _macdonald_cached(kappa: Partition, n: int, q: Fraction, t: Fraction) -> MPoly:
    qasc_logger.debug(f"Computing P{kappa} with n={n}, q={q}, t={t}.")
    pt = ParamPoint(q=q, t=t, nvars=n)
    target = eigenvalue(kappa, pt)
    # decreasing lex order extends dominance, so M1 is upper triangular
    below = [mu for mu in partitions(kappa.size, n) if kappa.dominates(mu)]
    coefficients: dict[Partition, Fraction] = {kappa: Fraction(1)}
    images = {mu: _m1_on_monomial(mu, n, q, t) for mu in below}
    for nu in below:
        if nu == kappa:
            continue
        rhs = sum(
            (
                coefficients[mu] * images[mu].get(nu, Fraction(0))
                for mu in coefficients
            ),
            Fraction(0),
        )
        pivot = target - eigenvalue(nu, pt)
        if pivot == 0:
            qasc_logger.info(f"Resonance between {kappa} and {nu} at {pt}.")
            raise ResonanceError(
                f"e({kappa}) = e({nu}) at q={q}, t={t}; choose another point.",
                pair=(kappa, nu),
            )
        value = rhs / pivot
        if value:
            coefficients[nu] = value
    result = MPoly.zero(n)
    for mu, coef in coefficients.items():
        result = result + monomial_symmetric(mu, n).scale(coef)
    return result


def macdonald_P(kappa: Partition, pt: ParamPoint) -> MPoly:
    """The monic Macdonald polynomial P_kappa(x;q,t) in n = pt.nvars variables.

    P_kappa = m_kappa + sum over mu strictly dominated by kappa, solved
    from (M_1 - e(kappa)) P_kappa = 0 in the monomial basis. Results are
    cached per (kappa, n, q, t).

    Args:
        kappa: The partition, of length at most n.
        pt: The parameter point; `a` is ignored.

    Raises:
        ResonanceError: If e(kappa) = e(mu) for a partition mu below kappa.
    """
    if kappa.length > pt.nvars:
        raise QascValueError(f"Partition {kappa} is longer than n={pt.nvars}.")
    return _macdonald_cached(kappa, pt.nvars, pt.q, pt.t)


def clear_macdonald_cache() -> None:
    """Drop all cached polynomials."""
    _macdonald_cached.cache_clear()
    _m1_on_monomial.cache_clear()


def to_macdonald_basis(f: MPoly, pt: ParamPoint) -> dict[Partition, Fraction]:
    """Coefficients of a symmetric polynomial in the P-basis.

    Peels off the lexicographically largest partition of the top degree,
    which always carries the leading monomial of its P.
    """
    pt.require_nvars(f.nvars)
    coefficients: dict[Partition, Fraction] = {}
    remainder = f
    while not remainder.is_zero():
        expansion = to_monomial_basis(remainder)
        lead = max(expansion, key=lambda lam: (lam.size, lam))
        coef = expansion[lead]
        coefficients[lead] = coef
        remainder = remainder - macdonald_P(lead, pt).scale(coef)
    return coefficients


def from_macdonald_basis(
    coefficients: dict[Partition, Fraction], pt: ParamPoint
) -> MPoly:
    """Assemble sum c_lambda P_lambda."""
    result = MPoly.zero(pt.nvars)
    for lam, coef in coefficients.items():
        result = result + macdonald_P(lam, pt).scale(coef)
    return result
