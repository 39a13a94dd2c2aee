"""Stateless HTTP/JSON service exposing the toolkit to the explorer UI.

Endpoints live under /api/v1 (unversioned /api aliases accepted).  Every
operation is a pure function of the request body, so responses are
deterministic and the server holds no session state.  A per-request time
budget (BLOCKADE_TIME_BUDGET_MS or --time-budget-ms) turns runaway
computations into 503s carrying a resume cursor instead of hanging clients.
"""

from __future__ import annotations

import json
import os
import time
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Callable, Optional

from . import jsonio
from .constructions import (
    EmptinessViolated,
    InvalidK,
    build_alt_3k,
    build_c0,
    build_p0,
    general_construction,
)
from .delaunay import (
    BlockingInstance,
    IdenticalPoints,
    PointSet,
    blocks,
    delaunay_edges,
    witness_interval,
)
from .geometry import DegenerateCircle, GeometryError, NoSolution, rat
from .lower_bounds import ArrangementOverflow, disjointness_bound, hitting_set_bound
from .perturbation import BudgetExhausted, certify_epsilon
from .solver import (
    NotConvexPosition,
    SolveResult,
    SolverConfig,
    conjecture_probe,
    greedy_cover_solve,
    midpoint_heuristic,
)
from .svg import render_svg

DOMAIN_ERRORS = (
    InvalidK,
    EmptinessViolated,
    IdenticalPoints,
    NotConvexPosition,
    DegenerateCircle,
    NoSolution,
    ArrangementOverflow,
    BudgetExhausted,
    GeometryError,
    ValueError,
)


class TimeBudgetExceeded(Exception):
    def __init__(self, resume: Optional[dict] = None):
        super().__init__("time budget exceeded")
        self.resume = resume


class _Deadline:
    def __init__(self, budget_ms: Optional[int]):
        self.t0 = time.monotonic()
        self.budget_ms = budget_ms

    def check(self, resume: Optional[dict] = None) -> None:
        if self.budget_ms is None:
            return
        if (time.monotonic() - self.t0) * 1000 > self.budget_ms:
            raise TimeBudgetExceeded(resume)


def _op_health(body: dict, deadline: _Deadline) -> dict:
    return {"ok": True}


def _op_delaunay(body: dict, deadline: _Deadline) -> dict:
    ps = jsonio.point_set_from_json(body)
    edges = sorted(delaunay_edges(ps))
    deadline.check()
    intervals = [jsonio.interval_to_json(witness_interval(ps, *e)) for e in edges]
    return {"edges": [list(e) for e in edges], "witness_intervals": intervals}


def _op_blocks(body: dict, deadline: _Deadline) -> dict:
    inst = BlockingInstance(
        jsonio.point_set_from_json(body["P"]),
        jsonio.point_set_from_json(body["Q"]),
        bool(body.get("exterior_only", False)),
    )
    return jsonio.verdict_to_json(blocks(inst))


def _construct(kind: str, k: int, tau) -> tuple[PointSet, Optional[object]]:
    if kind == "p0":
        ps, _ = build_p0(k)
        return ps, None
    if kind == "c0":
        ps, gadgets = build_p0(k)
        return ps, build_c0(gadgets)
    if kind == "c0prime":
        perturbed, family = general_construction(k, rat(tau if tau is not None else 0))
        return perturbed.points, family
    if kind == "alt3k":
        return build_alt_3k(k)
    raise ValueError(f"unknown construction kind {kind!r}")


def _op_construct(body: dict, deadline: _Deadline) -> dict:
    kind = body["kind"]
    k = int(body["k"])
    ps, family = _construct(kind, k, body.get("tau"))
    out = jsonio.point_set_to_json(ps)
    if family is not None:
        out["circles"] = jsonio.family_to_json(family)
    return out


def _op_certify_lb(body: dict, deadline: _Deadline) -> dict:
    construction = body["construction"]
    k = int(body["k"])
    tau = body.get("tau", "auto")
    explain = bool(body.get("explain", False))
    if construction == "collinear":
        ps, gadgets = build_p0(k)
        cert = disjointness_bound(ps, build_c0(gadgets))
        used_tau = Fraction(0)
    elif construction == "alt3k":
        ps, family = build_alt_3k(k)
        cert = disjointness_bound(ps, family)
        used_tau = Fraction(0)
    elif construction == "general":
        if tau == "auto" or tau is None:
            used_tau = certify_epsilon(k).tau_star
        else:
            used_tau = rat(tau)
        deadline.check({"construction": construction, "k": k, "tau": jsonio.rat_str(used_tau)})
        perturbed, family = general_construction(k, used_tau)
        cert = hitting_set_bound(perturbed.points, family)
    else:
        raise ValueError(f"unknown construction {construction!r}")
    out = jsonio.certificate_to_json(cert, explain=explain)
    out["construction"] = construction
    out["k"] = k
    out["tau"] = jsonio.rat_str(used_tau)
    return out


def _op_certify_epsilon(body: dict, deadline: _Deadline) -> dict:
    k = int(body["k"])
    deadline.check({"k": k})
    cert = certify_epsilon(k)
    out = jsonio.epsilon_to_json(cert)
    if body.get("emit_polys"):
        from .perturbation import all_tau_polynomials

        out["polynomials"] = [jsonio.tau_poly_to_json(tp) for tp in all_tau_polynomials(k)]
    return out


def _op_solve(body: dict, deadline: _Deadline) -> dict:
    ps = jsonio.point_set_from_json(body["P"])
    cfg = SolverConfig(
        exterior_only=bool(body.get("exterior_only", False)),
        candidate_density=int(body.get("candidate_density", 3)),
        max_rounds=int(body.get("max_rounds", 64)),
        seed=int(body.get("seed", 0)),
    )
    if body.get("heuristic") == "midpoint":
        q = midpoint_heuristic(ps, rat(body.get("offset", "1/100")))
        verdict = blocks(BlockingInstance(ps, q, cfg.exterior_only))
        res = SolveResult(q, verdict.blocked, len(q), (), 0)
    else:
        res = greedy_cover_solve(ps, cfg)
    return jsonio.solve_result_to_json(res)


def _op_probe(body: dict, deadline: _Deadline) -> dict:
    if "ngon" in body:
        from .constructions import regular_ngon

        ps = regular_ngon(int(body["ngon"]))
    else:
        ps = jsonio.point_set_from_json(body["P"])
    return jsonio.probe_to_json(conjecture_probe(ps, int(body.get("budget", 4))))


def _op_render(body: dict, deadline: _Deadline) -> dict:
    ps = jsonio.point_set_from_json(body["P"])
    family = jsonio.family_from_json(body["circles"]) if body.get("circles") else None
    blockers = jsonio.point_set_from_json(body["Q"]) if body.get("Q") else None
    return {"svg": render_svg(ps, family, blockers)}


OPS: dict[str, Callable[[dict, _Deadline], dict]] = {
    "health": _op_health,
    "delaunay": _op_delaunay,
    "blocks": _op_blocks,
    "construct": _op_construct,
    "certify-lb": _op_certify_lb,
    "certify-epsilon": _op_certify_epsilon,
    "solve": _op_solve,
    "probe": _op_probe,
    "render": _op_render,
}


def _make_handler(static_dir: Optional[Path], budget_ms: Optional[int]):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, payload: dict) -> None:
            data = jsonio.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(data)

        def _op_name(self) -> Optional[str]:
            path = self.path.split("?")[0].rstrip("/")
            for prefix in ("/api/v1/", "/api/"):
                if path.startswith(prefix):
                    return path[len(prefix):]
            return None

        def do_OPTIONS(self):
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Content-Length", "0")
            self.end_headers()

        def do_GET(self):
            op = self._op_name()
            if op == "health":
                self._send(200, {"ok": True})
                return
            if static_dir is not None:
                self._serve_static()
                return
            self._send(404, {"ok": False, "error": {"code": "NotFound", "message": self.path}})

        def _serve_static(self):
            rel = self.path.split("?")[0].lstrip("/") or "index.html"
            target = (static_dir / rel).resolve()
            if not str(target).startswith(str(static_dir.resolve())) or not target.is_file():
                self._send(404, {"ok": False, "error": {"code": "NotFound", "message": self.path}})
                return
            ctype = {
                ".html": "text/html",
                ".js": "application/javascript",
                ".css": "text/css",
                ".svg": "image/svg+xml",
                ".json": "application/json",
            }.get(target.suffix, "application/octet-stream")
            data = target.read_bytes()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def do_POST(self):
            op = self._op_name()
            if op is None or op not in OPS:
                self._send(404, {"ok": False, "error": {"code": "NotFound", "message": self.path}})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                raw = self.rfile.read(length) if length else b"{}"
                body = json.loads(raw.decode() or "{}")
                if not isinstance(body, dict):
                    raise KeyError("body must be a JSON object")
            except (json.JSONDecodeError, UnicodeDecodeError, KeyError) as exc:
                self._send(
                    400, {"ok": False, "error": {"code": "SchemaViolation", "message": str(exc)}}
                )
                return
            deadline = _Deadline(budget_ms)
            try:
                result = OPS[op](body, deadline)
            except TimeBudgetExceeded as exc:
                payload = {
                    "ok": False,
                    "error": {"code": "TimeBudgetExceeded", "message": "time budget exceeded"},
                }
                if exc.resume:
                    payload["error"]["resume"] = exc.resume
                self._send(503, payload)
                return
            except (KeyError, TypeError) as exc:
                self._send(
                    400, {"ok": False, "error": {"code": "SchemaViolation", "message": str(exc)}}
                )
                return
            except DOMAIN_ERRORS as exc:
                self._send(
                    422,
                    {
                        "ok": False,
                        "error": {"code": type(exc).__name__, "message": str(exc)},
                    },
                )
                return
            self._send(200, {"ok": True, "result": result})

    return Handler


def make_server(
    port: int = 0,
    static_dir: Optional[str] = None,
    time_budget_ms: Optional[int] = None,
) -> ThreadingHTTPServer:
    if time_budget_ms is None:
        env = os.environ.get("BLOCKADE_TIME_BUDGET_MS")
        time_budget_ms = int(env) if env else None
    sdir = Path(static_dir) if static_dir else None
    handler = _make_handler(sdir, time_budget_ms)
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int, static_dir: Optional[str] = None, time_budget_ms: Optional[int] = None) -> None:
    server = make_server(port, static_dir, time_budget_ms)
    host, actual_port = server.server_address[:2]
    print(f"blockade service listening on http://{host}:{actual_port}/api/v1/", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
