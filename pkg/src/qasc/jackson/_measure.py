"""Product measures on [a,1]^n and [1,oo)^n and the inner products they define."""

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from qasc.algebra import BigFloat, MPoly, ParamPoint, fraction_to_mpf
from qasc.jackson._lattice import (
    Domain,
    default_truncation,
    geometric_tail,
    lattice_points,
)
from qasc.jackson._weights import weight_u, weight_v
from qasc.qseries import QPoly1, u1
from qasc.utils import (
    NotSymmetricError,
    ParameterError,
    QascValueError,
    qasc_logger,
    resolve_precision,
)

Family = Literal["U", "V"]
Method = Literal["moments", "lattice"]

_DOMAINS: dict[str, Domain] = {"U": "[a,1]", "V": "[1,inf)"}


class QMeasure(BaseModel):
    """The measure prod_l w(x_l) d_qx_l of one family, with its truncation.

    Attributes:
        family: "U" for w_U on [a,1]^n, "V" for w_V on [1,oo)^n.
        pt: The parameter point, with t = q^k.
        truncation: Lattice points per branch and axis.
        precision: Decimal digits of the numerics.
    """

    family: Family
    pt: ParamPoint
    truncation: int = Field(ge=2)
    precision: int = Field(ge=10)
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def k(self) -> int:
        """The exponent k of t = q^k."""
        return self.pt.require_k()

    @property
    def nvars(self) -> int:
        """Number of integration variables."""
        return self.pt.nvars

    @property
    def domain(self) -> Domain:
        """The one-dimensional domain of every axis."""
        return _DOMAINS[self.family]


def q_measure(
    family: Family,
    pt: ParamPoint,
    truncation: int | None = None,
    precision: int | None = None,
) -> QMeasure:
    """Validated QMeasure with the default truncation rule.

    Raises:
        ParameterError: If q is outside (0, 1), t is not a power q^k, a >= 0
            for the U family or a = 0 for the V family.
    """
    if family not in _DOMAINS:
        raise QascValueError(f"Unknown family {family!r}, expected 'U' or 'V'.")
    pt.require_unit_interval()
    pt.require_k()
    if family == "U":
        pt.require_negative_a()
    elif pt.a == 0:
        raise ParameterError("The V measure needs a != 0.")
    digits = resolve_precision(precision)
    if truncation is None:
        truncation = default_truncation(pt, digits)
    return QMeasure(family=family, pt=pt, truncation=truncation, precision=digits)


@lru_cache(maxsize=32)
def delta_k(n: int, k: int, q: Fraction) -> MPoly:
    """prod_(p=-(k-1))^k prod_(i<j) (x_i - q^p x_j)."""
    if k < 1:
        raise QascValueError(f"k must be positive, got {k}.")
    result = MPoly.one(n)
    for p in range(-(k - 1), k + 1):
        for i in range(n):
            for j in range(i + 1, n):
                factor = MPoly.variable(n, i) - MPoly.variable(n, j).scale(q**p)
                result = result * factor
    return result


@lru_cache(maxsize=32)
def _axis(
    family: Family, q: Fraction, a: Fraction, truncation: int, precision: int
) -> tuple[tuple[tuple[mpmath.mpf, BigFloat], ...], ...]:
    # per branch: (x, Jackson weight times w(x)) in lattice order
    pt = ParamPoint(q=q, t=q, a=a, nvars=1)
    weight = weight_u if family == "U" else weight_v
    points = lattice_points(pt, _DOMAINS[family], truncation)
    qasc_logger.debug(
        f"Tabulating {len(points)} lattice weights of the {family} measure at {pt}."
    )
    with mpmath.workdps(precision):
        table = [
            (fraction_to_mpf(x), weight(x, pt, precision) * BigFloat.exact(jw))
            for x, jw in points
        ]
    return tuple(
        tuple(table[start : start + truncation])
        for start in range(0, len(table), truncation)
    )


def moments(
    family: Family,
    pt: ParamPoint,
    jmax: int,
    truncation: int | None = None,
    precision: int | None = None,
) -> list[BigFloat]:
    """int x^j w(x) d_qx for j = 0, ..., jmax on the family's domain.

    Raises:
        ConvergenceError: If a lattice branch does not decay.
    """
    digits = resolve_precision(precision)
    meas = q_measure(family, pt.replace(t=pt.q, nvars=1), truncation, digits)
    branches = _axis(family, pt.q, pt.a, meas.truncation, digits)
    result = []
    with mpmath.workdps(digits):
        for j in range(jmax + 1):
            total = BigFloat(0)
            tail = mpmath.mpf(0)
            for branch in branches:
                terms = [w * BigFloat(x**j) for x, w in branch]
                for term in terms:
                    total = total + term
                tail += geometric_tail(terms, f"moment {j} of the {family} measure")
            result.append(BigFloat(total.value, total.error + tail))
    return result


@lru_cache(maxsize=256)
def exact_moment_u(j: int, pt: ParamPoint) -> Fraction:
    """Constant term of x^j in the basis U_m(x; q), a rational in q and a.

    For 0 < q < 1 and a < 0 it equals (1/(1-q)) int_a^1 x^j w_U(x) d_qx; it
    is defined for every q and continues the moments to q > 1.
    """
    if j < 0:
        raise QascValueError(f"Moment order must be nonnegative, got {j}.")
    remainder = QPoly1([0] * j + [1])
    for m in range(j, 0, -1):
        remainder = remainder - u1(m, pt) * remainder.coefficient(m)
    return remainder.coefficient(0)


def integrate(h: MPoly, meas: QMeasure, method: Method = "moments") -> BigFloat:
    """The n-fold Jackson integral of h against prod_l w(x_l) d_qx_l.

    "moments" expands h in monomials and multiplies one-dimensional
    moments; "lattice" sums h over the product lattice point by point,
    with the tail estimated from the shells max_l m_l = m.
    """
    meas.pt.require_nvars(h.nvars)
    if method == "moments":
        return _integrate_moments(h, meas)
    if method == "lattice":
        return _integrate_lattice(h, meas)
    raise QascValueError(f"Unknown method {method!r}, expected moments or lattice.")


def _integrate_moments(h: MPoly, meas: QMeasure) -> BigFloat:
    n = meas.nvars
    jmax = max((h.degree_in(i) for i in range(n)), default=0)
    table = moments(meas.family, meas.pt, jmax, meas.truncation, meas.precision)
    with mpmath.workdps(meas.precision):
        total = BigFloat(0)
        for exp, coef in h.sorted_terms():
            term = BigFloat.exact(coef)
            for e in exp:
                term = term * table[e]
            total = total + term
        return total


def _integrate_lattice(h: MPoly, meas: QMeasure) -> BigFloat:
    n, size = meas.nvars, meas.truncation
    axis = [
        (m, point)
        for branch in _axis(
            meas.family, meas.pt.q, meas.pt.a, size, meas.precision
        )
        for m, point in enumerate(branch)
    ]
    with mpmath.workdps(meas.precision):
        shells = [BigFloat(0) for _ in range(size)]
        for combo in itertools.product(axis, repeat=n):
            weight = BigFloat(1)
            for _, (_, w) in combo:
                weight = weight * w
            value = h.evaluate_numeric([x for _, (x, _) in combo])
            shell = max(m for m, _ in combo)
            shells[shell] = shells[shell] + weight * BigFloat(value)
        total = BigFloat(0)
        for s in shells:
            total = total + s
        tail = geometric_tail(shells, f"{n}-fold lattice sum")
        return BigFloat(total.value, total.error + tail)


def _require_symmetric(*polys: MPoly) -> None:
    for p in polys:
        if not p.is_symmetric():
            raise NotSymmetricError(f"{p} is not symmetric.")


def inner_product(
    f: MPoly, g: MPoly, meas: QMeasure, method: Method = "moments"
) -> BigFloat:
    """<f | g> = int f g Delta_q^(k) prod_l w(x_l) d_qx_l.

    Raises:
        NotSymmetricError: If f or g is not symmetric.
        ConvergenceError: If a lattice branch does not decay.
    """
    _require_symmetric(f, g)
    integrand = f * g * delta_k(meas.nvars, meas.k, meas.pt.q)
    return integrate(integrand, meas, method)
