"""Command-line entry point: construct, certify, certify-lb, solve, probe, render, serve."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .constructions import (
    EmptinessViolated,
    InvalidK,
    build_alt_3k,
    build_c0,
    build_p0,
    general_construction,
    regular_ngon,
)
from .delaunay import IdenticalPoints
from .geometry import GeometryError, rat
from .lower_bounds import disjointness_bound, hitting_set_bound
from .perturbation import BudgetExhausted, all_tau_polynomials, certify_epsilon
from .solver import NotConvexPosition, SolverConfig, conjecture_probe, greedy_cover_solve
from .svg import render_svg


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _write_svg(path: str, points, circles=None, blockers=None) -> None:
    Path(path).write_text(render_svg(points, circles, blockers))


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "p0":
        ps, gadgets = build_p0(args.k)
        family = None
    elif kind == "c0":
        ps, gadgets = build_p0(args.k)
        family = build_c0(gadgets)
    elif kind == "c0prime":
        tau = certify_epsilon(args.k).tau_star if args.tau == "auto" else rat(args.tau or "0")
        perturbed, family = general_construction(args.k, tau)
        ps = perturbed.points
    elif kind == "alt3k":
        ps, family = build_alt_3k(args.k)
    else:
        raise SystemExit(f"unknown construction {kind!r}")
    payload = jsonio.point_set_to_json(ps)
    if family is not None:
        payload["circles"] = jsonio.family_to_json(family)
    _emit(args, payload)
    if args.svg:
        _write_svg(args.svg, ps, family)
    return 0


def _cmd_certify(args) -> int:
    cert = certify_epsilon(args.k)
    payload = jsonio.epsilon_to_json(cert)
    if args.emit_polys:
        payload["polynomials"] = [jsonio.tau_poly_to_json(tp) for tp in all_tau_polynomials(args.k)]
    _emit(args, payload)
    return 0


def _cmd_certify_lb(args) -> int:
    if args.construction == "collinear":
        ps, gadgets = build_p0(args.k)
        cert = disjointness_bound(ps, build_c0(gadgets))
        tau = Fraction(0)
    elif args.construction == "alt3k":
        ps, family = build_alt_3k(args.k)
        cert = disjointness_bound(ps, family)
        tau = Fraction(0)
    elif args.construction == "general":
        tau = certify_epsilon(args.k).tau_star if args.tau == "auto" else rat(args.tau)
        perturbed, family = general_construction(args.k, tau)
        cert = hitting_set_bound(perturbed.points, family)
    else:
        raise SystemExit(f"unknown construction {args.construction!r}")
    payload = jsonio.certificate_to_json(cert, explain=args.explain)
    payload["construction"] = args.construction
    payload["k"] = args.k
    payload["tau"] = jsonio.rat_str(tau)
    _emit(args, payload)
    return 0


def _cmd_solve(args) -> int:
    ps = jsonio.point_set_from_json(json.loads(Path(args.input).read_text()))
    cfg = SolverConfig(
        exterior_only=args.exterior,
        candidate_density=args.density,
        max_rounds=args.budget,
        seed=args.seed,
    )
    res = greedy_cover_solve(ps, cfg)
    _emit(args, jsonio.solve_result_to_json(res))
    if args.svg:
        _write_svg(args.svg, ps, None, res.Q)
    return 0 if res.verified else 1


def _cmd_probe(args) -> int:
    if args.ngon:
        ps = regular_ngon(args.ngon)
    elif args.input:
        ps = jsonio.point_set_from_json(json.loads(Path(args.input).read_text()))
    else:
        raise SystemExit("probe needs --ngon N or --input points.json")
    rep = conjecture_probe(ps, args.budget)
    _emit(args, jsonio.probe_to_json(rep))
    return 0


def _cmd_render(args) -> int:
    data = json.loads(Path(args.input).read_text())
    ps = jsonio.point_set_from_json(data)
    family = jsonio.family_from_json(data["circles"]) if data.get("circles") else None
    blockers = jsonio.point_set_from_json(data["Q"]) if data.get("Q") else None
    Path(args.output).write_text(render_svg(ps, family, blockers))
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, args.static, args.time_budget_ms)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockade", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a construction as JSON (optionally SVG)")
    p.add_argument("kind", choices=["p0", "c0", "c0prime", "alt3k"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tau", default=None, help="rational like 1/4096 or 'auto' (c0prime only)")
    p.add_argument("--svg", default=None, help="also render to this SVG file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("certify", help="find a certified perturbation size tau*")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-polys", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("certify-lb", help="certified exterior-blocking lower bound")
    p.add_argument("--construction", choices=["collinear", "general", "alt3k"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tau", default="auto", help="'auto' or a rational (general only)")
    p.add_argument("--explain", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_certify_lb)

    p = sub.add_parser("solve", help="search for a verified blocking set")
    p.add_argument("--input", required=True, help="PointSet JSON file")
    p.add_argument("--exterior", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=64, help="max rounds")
    p.add_argument("--density", type=int, default=3)
    p.add_argument("--svg", default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("probe", help="hunt for an n-point blocking set of an n-gon")
    p.add_argument("--ngon", type=int, default=None)
    p.add_argument("--input", default=None)
    p.add_argument("--budget", type=int, default=4)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("render", help="render a scene JSON to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("serve", help="run the HTTP/JSON service")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--static", default=None, help="directory with the UI bundle")
    p.add_argument("--time-budget-ms", type=int, default=None)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        InvalidK,
        EmptinessViolated,
        IdenticalPoints,
        NotConvexPosition,
        GeometryError,
        BudgetExhausted,
        ValueError,
    ) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
