"""The verification suites and their registry."""

from collections.abc import Callable
from fractions import Fraction

from qasc.algebra import sample_point
from qasc.asc import (
    a_contiguity_check,
    column_partition_checks,
    det_formula_check,
    e0_u_check,
    eigen_equation_check,
    hermite_trend_check,
    leading_term_check,
    pieri_u_check,
    route_agreement,
    shifted_vanishing_check,
    special_values_check,
    u_generating_function_check,
)
from qasc.hecke import (
    dunkl_pairing_check,
    dunkl_sum_check,
    e0_commutator_checks,
    form2_check,
    hecke_relation_checks,
    kernel_eigen_check,
    pairing_binomial_check,
    partial_m1_tilde_check,
)
from qasc.jackson import (
    hermiticity_check,
    insertion_check,
    integral_representations,
    kadell_check,
    norm0_check,
    norm_scaling_check,
    one_variable_orthogonality,
    orthogonality_suite,
    q_measure,
    small_a_asymptotics_check,
    sun_norm_check,
    uv_inversion_check,
    weight_reduction_check,
)
from qasc.kernels import (
    inversion_relation_check,
    kernel_specialization_checks,
    lassalle_e0_check,
)
from qasc.macdonald import (
    lassalle_expansion_check,
    macdonald_property_check,
    pieri_checks,
    positivity_check,
)
from qasc.operators import (
    b_operator_checks,
    commutator_checks,
    one_variable_eigen_check,
)
from qasc.partition import Partition, partitions_up_to
from qasc.qseries import (
    exponential_inversion_check,
    exponential_product_check,
    generating_function_check,
    u1_properties_check,
)
from qasc.utils import CheckReport, QascValueError, qasc_logger
from qasc.verify._options import SuiteOptions

SuiteFn = Callable[[SuiteOptions], list[CheckReport]]

ALL_SUITES = "all"


def identities_suite(opts: SuiteOptions) -> list[CheckReport]:
    """Exact identities of the one-variable, Macdonald, operator and U layers."""
    d = opts.degmax
    reports = []
    for pt in opts.generic_points():
        reports += [
            u1_properties_check(pt, d),
            generating_function_check(pt, d),
            exponential_inversion_check(pt.q, d),
            exponential_product_check(Fraction(1, 3), pt.q, opts.precision),
            macdonald_property_check(pt, d),
            pieri_checks(pt, d),
            commutator_checks(pt, d),
            b_operator_checks(pt, d),
            one_variable_eigen_check(pt, d),
            inversion_relation_check(pt, d),
            kernel_specialization_checks(pt, d),
            lassalle_e0_check(pt, d),
            u_generating_function_check(pt, d),
        ]
        if 0 < pt.q < 1 and 0 < pt.t < 1:
            reports.append(positivity_check(pt, d))
        for kappa in partitions_up_to(d, pt.nvars):
            reports += [
                route_agreement(kappa, pt),
                leading_term_check(kappa, pt),
                eigen_equation_check(kappa, pt),
                pieri_u_check(kappa, pt),
                e0_u_check(kappa, pt),
                a_contiguity_check(kappa, pt),
                special_values_check(kappa, pt),
                shifted_vanishing_check(kappa, pt.replace(a=0)),
                lassalle_expansion_check(kappa, pt, d),
            ]
    return reports


def hecke_suite(opts: SuiteOptions) -> list[CheckReport]:
    """Affine Hecke relations, Dunkl operators and the Dunkl pairing."""
    d = opts.degmax
    reports = []
    for pt in opts.generic_points():
        reports += [
            hecke_relation_checks(pt, d),
            dunkl_sum_check(pt, d),
            partial_m1_tilde_check(pt, d),
            e0_commutator_checks(pt, d),
            form2_check(pt, d),
            kernel_eigen_check(pt, d),
            dunkl_pairing_check(pt, d),
            pairing_binomial_check(pt, d),
        ]
    return reports


def orthogonality_suite_runner(opts: SuiteOptions) -> list[CheckReport]:
    """Gram matrices of both families and the hermiticity of H."""
    d = opts.degmax
    reports = []
    for pt in opts.lattice_points():
        reports.append(one_variable_orthogonality(pt, d, opts.precision))
        for family in ("U", "V"):
            meas = q_measure(family, pt, precision=opts.precision)
            reports.append(orthogonality_suite(d, meas))
            reports.append(hermiticity_check(meas, d))
    return reports


def norms_suite(opts: SuiteOptions) -> list[CheckReport]:
    """Closed-form normalizations against lattice sums, and the weights."""
    p = opts.precision
    reports = []
    for pt in opts.lattice_points():
        reports += [
            norm0_check(pt, "U", p),
            norm0_check(pt, "V", p),
            norm_scaling_check(pt, p),
            insertion_check(pt, p),
            small_a_asymptotics_check(pt, precision=p),
            weight_reduction_check(pt, precision=p),
            uv_inversion_check(pt, 1, precision=p),
        ]
    return reports


def integral_reps_suite(opts: SuiteOptions) -> list[CheckReport]:
    """Kernel integrals against the U, V and P polynomials."""
    return [
        integral_representations(
            pt, k=opts.k, kappa_degmax=opts.degmax, precision=opts.precision
        )
        for pt in opts.lattice_points()
    ]


def column_partition_suite(opts: SuiteOptions) -> list[CheckReport]:
    """Column partitions and their scalar sequences."""
    return [
        column_partition_checks(pt, mmax=max(opts.degmax, pt.nvars))
        for pt in opts.generic_points()
    ]


def _hermite_partition(n: int) -> Partition:
    # In one variable the rescaled U_(2) equals its limit exactly
    return Partition([2] if n > 1 else [3])


def schur_line_suite(opts: SuiteOptions) -> list[CheckReport]:
    """The Schur line t = q: determinants, norms, Kadell and the Hermite limit."""
    d = opts.degmax
    reports = []
    for pt in opts.lattice_points(k=1):
        reports += [
            det_formula_check(kappa, pt) for kappa in partitions_up_to(d, pt.nvars)
        ]
        reports.append(sun_norm_check(pt, d))
        reports.append(kadell_check(pt, d, opts.precision))
    if d >= 1:
        reports.append(
            hermite_trend_check(_hermite_partition(opts.n), sample_point(opts.n))
        )
    return reports


class ImplementedSuites:
    """A class to manage the available verification suites."""

    _instance = None
    _implemented_suites: dict[str, SuiteFn]

    def __new__(cls):
        """Create a new instance of the class if it does not exist."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._implemented_suites = {}
        return cls._instance

    @property
    def available_suites(self) -> list[str]:
        """Return the registered suites in name order."""
        return sorted(self._implemented_suites.keys())

    def get_suite(self, name: str) -> SuiteFn:
        """Return the suite registered under `name`."""
        if name not in self._implemented_suites:
            raise QascValueError(f"Suite {name} not implemented.")
        return self._implemented_suites[name]

    def add_suite(self, name: str, suite: SuiteFn, overwrite: bool = False) -> None:
        """Register a new suite."""
        if name == ALL_SUITES:
            raise QascValueError(f"The suite name {ALL_SUITES!r} is reserved.")
        if name in self._implemented_suites and not overwrite:
            raise QascValueError(
                f"Suite {name} already implemented. "
                "Use the `overwrite=True` parameter to overwrite it."
            )
        self._implemented_suites[name] = suite


ImplementedSuites().add_suite("identities", identities_suite)
ImplementedSuites().add_suite("hecke", hecke_suite)
ImplementedSuites().add_suite("orthogonality", orthogonality_suite_runner)
ImplementedSuites().add_suite("norms", norms_suite)
ImplementedSuites().add_suite("integral-reps", integral_reps_suite)
ImplementedSuites().add_suite("appendixA", column_partition_suite)
ImplementedSuites().add_suite("appendixB", schur_line_suite)


def run_suite(name: str, opts: SuiteOptions | None = None) -> list[CheckReport]:
    """Run a suite, or every suite in name order for `all`.

    Within a suite the reports are ordered by check name; the sort is
    stable, so reports of the same check keep the order of the points.
    """
    opts = SuiteOptions() if opts is None else opts
    registry = ImplementedSuites()
    names = registry.available_suites if name == ALL_SUITES else [name]
    reports = []
    for suite_name in names:
        suite = registry.get_suite(suite_name)
        qasc_logger.info(f"Running suite {suite_name} with {opts}.")
        results = suite(opts)
        failed = sum(not r.passed for r in results)
        qasc_logger.info(
            f"Suite {suite_name}: {len(results) - failed} passed, {failed} failed."
        )
        reports += sorted(results, key=lambda r: r.check)
    return reports
