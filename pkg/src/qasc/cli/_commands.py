"""The sub-commands; each returns a JSON payload and an exit code."""

import argparse
from typing import Any

from qasc.algebra import ParamPoint
from qasc.asc import ImplementedRoutes, asc_u, asc_v, asc_v_expop, det_formula
from qasc.macdonald import macdonald_P
from qasc.partition import Partition
from qasc.utils import qasc_logger
from qasc.verify import SuiteOptions, run_suite

Result = tuple[Any, int]


def _point(args: argparse.Namespace, t: Any = None, a: Any = None) -> ParamPoint:
    return ParamPoint(
        q=args.q,
        t=args.t if t is None else t,
        a=args.a if a is None else a,
        nvars=args.n,
    )


def _build(family: str, route: str, kappa: Partition, pt: ParamPoint):
    if family == "U":
        return asc_u(kappa, pt, route)
    if route == "expop":
        return asc_v_expop(kappa, pt)
    return asc_v(kappa, pt, route)


def cmd_macdonald(args: argparse.Namespace) -> Result:
    """P_kappa at (q, t)."""
    pt = _point(args, a=0)
    poly = macdonald_P(args.partition, pt)
    return {
        "kappa": args.partition.to_json(),
        "params": pt.as_params(),
        "poly": poly.to_json(),
    }, 0


def cmd_asc(args: argparse.Namespace) -> Result:
    """U_kappa or V_kappa by one route, or by all routes with an agreement flag."""
    pt = _point(args)
    kappa = args.partition
    if args.route != "all":
        payload = _build(args.family, args.route, kappa, pt).to_json()
        payload["route"] = args.route
        return payload, 0
    routes = ImplementedRoutes().available_routes
    built = {name: _build(args.family, name, kappa, pt) for name in routes}
    reference = built[routes[0]]
    agree = all(p.poly == reference.poly for p in built.values())
    if not agree:
        qasc_logger.warning(f"Routes disagree for {args.family}_{kappa} at {pt}.")
    payload = reference.to_json()
    payload["routes"] = {name: p.poly.to_json() for name, p in built.items()}
    payload["agree"] = agree
    return payload, 0


def cmd_det(args: argparse.Namespace) -> Result:
    """U_kappa from the determinant formula on the line t = q."""
    pt = _point(args, t=args.q)
    return {
        "family": "U",
        "kappa": args.partition.to_json(),
        "params": pt.as_params(),
        "poly": det_formula(args.partition, pt).to_json(),
        "route": "det",
    }, 0


def cmd_verify(args: argparse.Namespace) -> Result:
    """Run a suite; exit 1 if any check fails."""
    opts = SuiteOptions(
        n=args.n,
        k=args.k,
        degmax=args.degmax,
        seed=args.seed,
        points=args.points,
        precision=args.precision,
        q=args.q,
        t=args.t,
        a=args.a,
    )
    reports = run_suite(args.suite, opts)
    code = 0 if all(r.passed for r in reports) else 1
    return [r.to_dict() for r in reports], code


COMMANDS = {
    "macdonald": cmd_macdonald,
    "asc": cmd_asc,
    "det": cmd_det,
    "verify": cmd_verify,
}
