"""Construction routes of the multivariable Al-Salam & Carlitz polynomials."""

from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache

from qasc.algebra import MPoly, ParamPoint, diagonal_product
from qasc.hecke import apply_dunkl_polynomial
from qasc.kernels import kernel_coefficient
from qasc.macdonald import from_macdonald_basis, macdonald_P, to_macdonald_basis
from qasc.operators import apply_h_form1
from qasc.partition import Partition, eigenvalue_tilde, partitions, partitions_up_to
from qasc.qseries import rho_coefficients, rho_inverse_coefficients
from qasc.utils import QascValueError, ResonanceError, qasc_logger

RouteFn = Callable[[Partition, ParamPoint], MPoly]


def _check_length(kappa: Partition, pt: ParamPoint) -> None:
    if kappa.length > pt.nvars:
        raise QascValueError(f"Partition {kappa} is longer than n={pt.nvars}.")


@lru_cache(maxsize=1024)
def _h_on_p(nu: Partition, pt: ParamPoint) -> dict[Partition, Fraction]:
    return to_macdonald_basis(apply_h_form1(macdonald_P(nu, pt), pt), pt)


@lru_cache(maxsize=1024)
def eigen_route(kappa: Partition, pt: ParamPoint) -> MPoly:
    """Solve H U = e~(kappa) U for U = P_kappa + lower degrees, in the P-basis.

    H keeps each P_nu up to lower degree terms, so the system is
    triangular in |nu| and diagonal within a degree.

    Raises:
        ResonanceError: If e~(kappa) = e~(mu) for some mu with |mu| < |kappa|,
            or for mu != kappa of the same size.
    """
    _check_length(kappa, pt)
    target = eigenvalue_tilde(kappa, pt)
    for mu in partitions_up_to(kappa.size, pt.nvars):
        if mu != kappa and eigenvalue_tilde(mu, pt) == target:
            qasc_logger.info(f"Resonance between {kappa} and {mu} at {pt}.")
            raise ResonanceError(
                f"e~({kappa}) = e~({mu}) at {pt}; choose another point.",
                pair=(kappa, mu),
            )
    coefficients: dict[Partition, Fraction] = {kappa: Fraction(1)}
    for size in range(kappa.size - 1, -1, -1):
        for sigma in partitions(size, pt.nvars):
            rhs = sum(
                (
                    coef * _h_on_p(nu, pt).get(sigma, Fraction(0))
                    for nu, coef in coefficients.items()
                    if nu.size > size
                ),
                Fraction(0),
            )
            value = -rhs / (eigenvalue_tilde(sigma, pt) - target)
            if value:
                coefficients[sigma] = value
    return from_macdonald_basis(coefficients, pt)


@lru_cache(maxsize=256)
def _rho_times_p(
    sigma: Partition, pt: ParamPoint, degmax: int
) -> dict[Partition, Fraction]:
    product = diagonal_product(rho_coefficients(pt, degmax), pt.nvars, degmax)
    series = (product * macdonald_P(sigma, pt)).truncate(degmax)
    return to_macdonald_basis(series, pt)


def genfun_route(kappa: Partition, pt: ParamPoint) -> MPoly:
    """Read U_kappa off prod_i rho_a(x_i) 0F0(x; y) = sum_k f_k U_k(y) P_k(x).

    With prod_i rho_a(x_i) P_sigma(x) = sum_k c_(k sigma) P_k(x), the
    coefficient of P_kappa(x) gives U_kappa = sum_sigma (f_sigma/f_kappa)
    c_(kappa sigma) P_sigma.
    """
    _check_length(kappa, pt)
    f_kappa = kernel_coefficient("F", kappa, pt)
    coefficients = {}
    for sigma in partitions_up_to(kappa.size, pt.nvars):
        c = _rho_times_p(sigma, pt, kappa.size).get(kappa, Fraction(0))
        if c:
            coefficients[sigma] = kernel_coefficient("F", sigma, pt) / f_kappa * c
    return from_macdonald_basis(coefficients, pt)


def expop_route(kappa: Partition, pt: ParamPoint) -> MPoly:
    """rho_a(D_1) ... rho_a(D_n) P_kappa, each series cut at degree |kappa|."""
    _check_length(kappa, pt)
    d = kappa.size
    operator = diagonal_product(rho_coefficients(pt, d), pt.nvars, d)
    return apply_dunkl_polynomial(operator, macdonald_P(kappa, pt), pt)


def expop_v_route(kappa: Partition, pt: ParamPoint) -> MPoly:
    """1 / (rho_a(q D~_1) ... rho_a(q D~_n)) P_kappa, with D~ at (1/q, 1/t)."""
    _check_length(kappa, pt)
    d = kappa.size
    series = [
        s * pt.q**m for m, s in enumerate(rho_inverse_coefficients(pt, d))
    ]
    operator = diagonal_product(series, pt.nvars, d)
    return apply_dunkl_polynomial(operator, macdonald_P(kappa, pt), pt, tilde=True)


class ImplementedRoutes:
    """A class to manage the available construction routes of U_kappa."""

    _instance = None
    _implemented_routes: dict[str, RouteFn]

    def __new__(cls):
        """Create a new instance of the class if it does not exist."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._implemented_routes = {}
        return cls._instance

    @property
    def available_routes(self) -> list[str]:
        """Return the available routes."""
        return list(self._implemented_routes.keys())

    def get_route(self, name: str) -> RouteFn:
        """Return the route registered under `name`."""
        if name not in self._implemented_routes:
            raise QascValueError(f"Route {name} not implemented.")
        return self._implemented_routes[name]

    def add_route(self, name: str, route: RouteFn, overwrite: bool = False) -> None:
        """Register a new route."""
        if name in self._implemented_routes and not overwrite:
            raise QascValueError(
                f"Route {name} already implemented. "
                "Use the `overwrite=True` parameter to overwrite it."
            )
        self._implemented_routes[name] = route


ImplementedRoutes().add_route("eigen", eigen_route)
ImplementedRoutes().add_route("genfun", genfun_route)
ImplementedRoutes().add_route("expop", expop_route)


def clear_route_caches() -> None:
    """Drop cached U polynomials and operator tables."""
    eigen_route.cache_clear()
    _h_on_p.cache_clear()
    _rho_times_p.cache_clear()
