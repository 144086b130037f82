"""The U and V families as values, and their public constructors."""

from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

from qasc.algebra import MPoly, ParamPoint
from qasc.asc._routes import ImplementedRoutes, expop_v_route
from qasc.macdonald import to_macdonald_basis
from qasc.partition import Partition
from qasc.utils import (
    CheckReport,
    NotSymmetricError,
    combine,
    exact_report,
    qasc_logger,
)

Family = Literal["U", "V"]
RouteName = Literal["eigen", "genfun", "expop"]


class AscPoly(BaseModel):
    """A multivariable Al-Salam & Carlitz polynomial with its provenance.

    Attributes:
        kappa: The indexing partition.
        family: "U" or "V".
        pt: The parameter point the polynomial was built at. For the V family
            this is the point (q, t), not the inverted one.
        poly: The polynomial in x_1, ..., x_n.
        route: The construction route.
    """

    kappa: Partition
    family: Family
    pt: ParamPoint
    poly: MPoly
    route: RouteName
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def nvars(self) -> int:
        """Number of variables."""
        return self.poly.nvars

    def to_json(self) -> dict[str, Any]:
        """Serialize as {family, kappa, params, poly}."""
        return {
            "family": self.family,
            "kappa": self.kappa.to_json(),
            "params": self.pt.as_params(),
            "poly": self.poly.to_json(),
        }


def asc_u(kappa: Partition, pt: ParamPoint, route: RouteName = "eigen") -> AscPoly:
    """U_kappa^(a)(x; q, t) by the requested construction route."""
    builder = ImplementedRoutes().get_route(route)
    qasc_logger.debug(f"Building U_{kappa} at {pt} via {route}.")
    return AscPoly(
        kappa=kappa, family="U", pt=pt, poly=builder(kappa, pt), route=route
    )


def asc_u_eigen(kappa: Partition, pt: ParamPoint) -> AscPoly:
    """U_kappa as the eigenfunction of H of the form P_kappa + lower terms."""
    return asc_u(kappa, pt, "eigen")


def asc_u_genfun(kappa: Partition, pt: ParamPoint) -> AscPoly:
    """U_kappa extracted from the generating function."""
    return asc_u(kappa, pt, "genfun")


def asc_u_expop(kappa: Partition, pt: ParamPoint) -> AscPoly:
    """U_kappa = rho_a(D_1) ... rho_a(D_n) P_kappa."""
    return asc_u(kappa, pt, "expop")


def asc_v(kappa: Partition, pt: ParamPoint, route: RouteName = "eigen") -> AscPoly:
    """V_kappa(x; q, t) = U_kappa(x; 1/q, 1/t)."""
    u = asc_u(kappa, pt.inverted(), route)
    return AscPoly(kappa=kappa, family="V", pt=pt, poly=u.poly, route=route)


def asc_v_expop(kappa: Partition, pt: ParamPoint) -> AscPoly:
    """V_kappa from the inverse exponential operator in the tilde Dunkl operators."""
    poly = expop_v_route(kappa, pt)
    return AscPoly(kappa=kappa, family="V", pt=pt, poly=poly, route="expop")


def route_agreement(kappa: Partition, pt: ParamPoint) -> CheckReport:
    """All registered routes produce the same U_kappa, and both V routes agree."""
    params = {**pt.as_params(), "kappa": str(kappa)}
    routes = ImplementedRoutes().available_routes
    reference = asc_u(kappa, pt, routes[0]).poly
    reports = [
        exact_report(
            f"route-{name}", params, asc_u(kappa, pt, name).poly, reference
        )
        for name in routes[1:]
    ]
    reports.append(
        exact_report(
            "route-v-expop",
            params,
            asc_v_expop(kappa, pt).poly,
            asc_v(kappa, pt).poly,
        )
    )
    return combine("route-agreement", params, reports, {"routes": routes})


def to_asc_basis(
    f: MPoly, pt: ParamPoint, route: RouteName = "eigen"
) -> dict[Partition, Fraction]:
    """Coefficients of a symmetric polynomial f in the basis U_kappa.

    The top degree part is peeled off in the P-basis; since U_kappa is
    P_kappa plus lower degree terms, the same coefficients apply to U.
    """
    if not f.is_symmetric():
        raise NotSymmetricError(f"{f} is not symmetric.")
    pt.require_nvars(f.nvars)
    result: dict[Partition, Fraction] = {}
    remainder = f
    while not remainder.is_zero():
        top = remainder.degree()
        expansion = to_macdonald_basis(remainder.homogeneous_part(top), pt)
        for kappa, coef in expansion.items():
            result[kappa] = result.get(kappa, Fraction(0)) + coef
            remainder = remainder - asc_u(kappa, pt, route).poly.scale(coef)
    return result
