"""Symmetric polynomial bases and conversions."""

from collections.abc import Mapping, Sequence
from fractions import Fraction
from itertools import permutations

from qasc.algebra._mpoly import MPoly
from qasc.partition import Partition, partitions_up_to
from qasc.utils import NotSymmetricError, QascValueError


def monomial_symmetric(lam: Partition, n: int) -> MPoly:
    """m_lambda in n variables: the sum of the distinct permutations of x^lambda."""
    if lam.length > n:
        raise QascValueError(f"Partition {lam} is longer than n={n}.")
    exps = set(permutations(lam.padded(n)))
    return MPoly(n, dict.fromkeys(exps, 1))


def elementary(r: int, n: int) -> MPoly:
    """e_r = m_(1^r), with e_0 = 1."""
    if not 0 <= r <= n:
        raise QascValueError(f"Elementary e_{r} needs 0 <= r <= n={n}.")
    return monomial_symmetric(Partition([1] * r), n)


def power_sum(k: int, n: int) -> MPoly:
    """p_k = x_1^k + ... + x_n^k."""
    return monomial_symmetric(Partition([k]), n) if k > 0 else MPoly.constant(n, n)


def to_monomial_basis(p: MPoly) -> dict[Partition, Fraction]:
    """Coefficients c_lambda with p = sum c_lambda m_lambda."""
    if not p.is_symmetric():
        raise NotSymmetricError(f"{p} is not symmetric.")
    return {
        Partition(exp): coef
        for exp, coef in p.terms.items()
        if all(a >= b for a, b in zip(exp, exp[1:], strict=False))
    }


def from_monomial_basis(coeffs: Mapping[Partition, Fraction], n: int) -> MPoly:
    """Assemble sum c_lambda m_lambda."""
    result = MPoly.zero(n)
    for lam, coef in coeffs.items():
        result = result + monomial_symmetric(lam, n).scale(coef)
    return result


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..n-1 by inversion count."""
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def determinant(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Leibniz expansion of a square matrix of polynomials."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise QascValueError("Determinant of a non-square matrix.")
    if size == 0:
        raise QascValueError("Determinant of an empty matrix.")
    nvars = matrix[0][0].nvars
    total = MPoly.zero(nvars)
    for perm in permutations(range(size)):
        term = MPoly.constant(nvars, permutation_sign(perm))
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if term.is_zero():
                break
        total = total + term
    return total


def vandermonde(n: int) -> MPoly:
    """prod_{i<j} (x_i - x_j)."""
    result = MPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (MPoly.variable(n, i) - MPoly.variable(n, j))
    return result


def schur(kappa: Partition, n: int) -> MPoly:
    """Schur polynomial s_kappa as the bialternant ratio."""
    if kappa.length > n:
        raise QascValueError(f"Partition {kappa} is longer than n={n}.")
    shifted = [k + n - 1 - i for i, k in enumerate(kappa.padded(n))]
    alternant = MPoly(
        n,
        {
            tuple(shifted[perm.index(j)] for j in range(n)): permutation_sign(perm)
            for perm in permutations(range(n))
        },
    )
    return alternant.exact_divide(vandermonde(n))


def monomial_basis(n: int, degmax: int) -> list[tuple[Partition, MPoly]]:
    """The m_lambda with |lambda| <= degmax and length <= n, by degree."""
    return [(lam, monomial_symmetric(lam, n)) for lam in partitions_up_to(degmax, n)]


def diagonal_product(
    coefficients: Sequence[Fraction], n: int, degmax: int
) -> MPoly:
    """prod_i sum_m c_m x_i^m, truncated to total degree degmax."""
    product = MPoly.one(n)
    for i in range(n):
        factor = MPoly.zero(n)
        for m, c in enumerate(coefficients[: degmax + 1]):
            if c:
                factor = factor + MPoly.monomial(n, {i: m}, c)
        product = product.mul_truncated(factor, degmax)
    return product
