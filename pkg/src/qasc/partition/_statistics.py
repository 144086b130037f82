"""Hook products, principal specialization and Pieri-type coefficients."""

from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING

from qasc.partition._partition import Partition
from qasc.utils import QascValueError

if TYPE_CHECKING:
    from qasc.algebra import ParamPoint


def conjugate(lam: Partition) -> Partition:
    """The conjugate partition."""
    return lam.conjugate()


def b_stat(lam: Partition) -> int:
    """b(lambda) = sum_j (j - 1) lambda_j."""
    return lam.b()


def hook_products(lam: Partition, pt: "ParamPoint") -> tuple[Fraction, Fraction]:
    """Return (h_lambda(q,t), h'_lambda(q,t)).

    h = prod (1 - q^arm t^(leg+1)) and h' = prod (1 - q^(arm+1) t^leg),
    the products running over the cells of the diagram.
    """
    h = Fraction(1)
    h_prime = Fraction(1)
    for i, j in lam.cells():
        arm, leg = lam.arm(i, j), lam.leg(i, j)
        h *= 1 - pt.q**arm * pt.t ** (leg + 1)
        h_prime *= 1 - pt.q ** (arm + 1) * pt.t**leg
    return h, h_prime


def tdelta(n: int, t: Fraction) -> tuple[Fraction, ...]:
    """The point (1, t, ..., t^(n-1))."""
    return tuple(t**i for i in range(n))


def principal_specialization(lam: Partition, pt: "ParamPoint") -> Fraction:
    """P_lambda(1, t, ..., t^(n-1); q, t) from its product formula."""
    n = pt.nvars
    if lam.length > n:
        raise QascValueError(f"Partition {lam} is longer than n={n}.")
    h, _ = hook_products(lam, pt)
    value = pt.t ** lam.b()
    for i, j in lam.cells():
        value *= 1 - pt.q ** (j - 1) * pt.t ** (n - i + 1)
    return value / h


def eigenvalue(kappa: Partition, pt: "ParamPoint") -> Fraction:
    """e(kappa) = sum q^kappa_i t^(n-i), the M1 eigenvalue."""
    n = pt.nvars
    return sum(
        (pt.q**k * pt.t ** (n - i) for i, k in enumerate(kappa.padded(n), start=1)),
        Fraction(0),
    )


def eigenvalue_tilde(kappa: Partition, pt: "ParamPoint") -> Fraction:
    """e~(kappa) = sum q^(-kappa_i) t^(i-n), the eigenvalue of the ASC operator."""
    n = pt.nvars
    rows = enumerate(kappa.padded(n), start=1)
    return sum(
        (pt.q ** (-k) * pt.t ** (i - n) for i, k in rows),
        Fraction(0),
    )


def nodes(lam: Partition, n: int) -> tuple[list[int], list[int]]:
    """Rows where a node can be added (length stays <= n) or removed."""
    addable = [
        i
        for i in range(1, min(lam.length + 1, n) + 1)
        if i == 1 or lam.part(i - 1) > lam.part(i)
    ]
    removable = [i for i in range(1, lam.length + 1) if lam.part(i) > lam.part(i + 1)]
    return addable, removable


def binom_remove(lam: Partition, p_row: int, pt: "ParamPoint") -> Fraction:
    """The generalized binomial coefficient (lambda over lambda_(p)).

    Explicit product evaluation, valid for a removable row p.
    """
    _, removable = nodes(lam, max(lam.length, 1))
    if p_row not in removable:
        raise QascValueError(f"Row {p_row} is not removable from {lam}.")
    q, t = pt.q, pt.t
    ell = lam.length
    lp = lam.part(p_row)
    value = t ** (1 - p_row) * (1 - q**lp * t ** (ell - p_row)) / (1 - q)
    for i in range(1, p_row):
        d = lam.part(i) - lp
        value *= (1 - q**d * t ** (p_row + 1 - i)) / (1 - q**d * t ** (p_row - i))
    for i in range(p_row + 1, ell + 1):
        d = lp - lam.part(i)
        value *= (1 - q**d * t ** (i - p_row - 1)) / (1 - q**d * t ** (i - p_row))
    return value


def binom_add(lam: Partition, row: int, pt: "ParamPoint") -> Fraction:
    """(lambda^(i) over lambda), the removal binomial read from the larger shape."""
    return binom_remove(lam.add_node(row), row, pt)


def _is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    return all(
        0 <= lam.part(i) - mu.part(i) <= 1
        for i in range(1, max(lam.length, mu.length) + 1)
    )


def psi_prime(lam: Partition, mu: Partition, pt: "ParamPoint") -> Fraction:
    """Pieri coefficient psi'_{lambda/mu} for a vertical strip lambda/mu.

    Literal product of b_lambda(s) / b_mu(s) over the cells s lying in a
    column that meets lambda/mu but in a row that does not.
    """
    if not _is_vertical_strip(lam, mu):
        raise QascValueError(f"{lam}/{mu} is not a vertical strip.")
    q, t = pt.q, pt.t
    lam_c, mu_c = lam.conjugate(), mu.conjugate()
    rows = {i for i in range(1, lam.length + 1) if lam.part(i) != mu.part(i)}
    cols = {mu.part(i) + 1 for i in rows}
    value = Fraction(1)
    for i, j in mu.cells():
        if j not in cols or i in rows:
            continue
        a_l, l_l = lam.part(i) - j, lam_c.part(j) - i
        a_m, l_m = mu.part(i) - j, mu_c.part(j) - i
        value *= (1 - q**a_l * t ** (l_l + 1)) / (1 - q ** (a_l + 1) * t**l_l)
        value *= (1 - q ** (a_m + 1) * t**l_m) / (1 - q**a_m * t ** (l_m + 1))
    return value


def vertical_strips(lam: Partition, r: int, n: int) -> list[Partition]:
    """All mu with lambda/mu a vertical r-strip, in increasing lex order."""
    if not 0 <= r <= n:
        raise QascValueError(f"r must satisfy 0 <= r <= n={n}, got {r}.")
    found = set()
    for rows in combinations(range(lam.length), r):
        values = list(lam.parts)
        for i in rows:
            values[i] -= 1
        if all(a >= b for a, b in zip(values, values[1:], strict=False)):
            found.add(Partition(values))
    return sorted(found)
