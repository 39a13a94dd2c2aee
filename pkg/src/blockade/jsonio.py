"""JSON schemas: exact rationals travel as canonical "num/den" strings."""

from __future__ import annotations

import json
from typing import Any, Optional

from .constructions import CircleFamily, TaggedCircle
from .delaunay import PointSet, Verdict, WitnessInterval
from .geometry import Circle, Hull, Point, rat, rat_str
from .lower_bounds import Certificate
from .perturbation import EpsilonCertificate, TauPolynomial
from .solver import ProbeReport, SolveResult


def dumps(obj: Any) -> str:
    """Canonical, byte-stable encoding."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def point_to_json(p: Point, label: Optional[str] = None) -> dict:
    d = {"x": rat_str(p.x), "y": rat_str(p.y)}
    if label is not None:
        d["label"] = label
    return d


def point_from_json(d: dict) -> Point:
    return Point(rat(d["x"]), rat(d["y"]))


def point_set_to_json(ps: PointSet) -> dict:
    return {
        "points": [
            point_to_json(p, ps.label(i)) for i, p in enumerate(ps.points)
        ]
    }


def point_set_from_json(d: dict) -> PointSet:
    pts = [point_from_json(e) for e in d["points"]]
    labels = [e.get("label") for e in d["points"]]
    if all(l is None for l in labels):
        labels = None
    return PointSet(tuple(pts), tuple(labels) if labels else None)


def circle_to_json(tc: TaggedCircle) -> dict:
    return {
        "role": tc.role,
        "gadget": tc.gadget,
        "center": point_to_json(tc.circle.center),
        "radius_sq": rat_str(tc.circle.radius_sq),
    }


def circle_from_json(d: dict) -> TaggedCircle:
    return TaggedCircle(
        d.get("role", "C"),
        int(d.get("gadget", 0)),
        Circle(point_from_json(d["center"]), rat(d["radius_sq"])),
    )


def family_to_json(fam: CircleFamily) -> list:
    return [circle_to_json(tc) for tc in fam.circles]


def family_from_json(items: list) -> CircleFamily:
    return CircleFamily(tuple(circle_from_json(d) for d in items))


def interval_to_json(w: WitnessInterval) -> dict:
    return {
        "edge": list(w.edge),
        "empty": w.empty,
        "lo": rat_str(w.lo) if w.lo is not None else "-inf",
        "hi": rat_str(w.hi) if w.hi is not None else "+inf",
        "lo_closed": w.lo_closed,
        "hi_closed": w.hi_closed,
    }


def verdict_to_json(v: Verdict) -> dict:
    out: dict[str, Any] = {"verdict": v.status}
    if v.status == "unblocked":
        out["unblocked_edges"] = [list(e) for e in v.unblocked_edges]
    if v.status == "exterior_violation":
        out["violating_points"] = list(v.violating_points)
    return out


def hull_to_json(hull: Hull) -> dict:
    return {
        "vertices": [point_to_json(p) for p in hull.vertices],
        "collinear_boundary": hull.collinear_boundary,
    }


def certificate_to_json(cert: Certificate, explain: bool = False) -> dict:
    out: dict[str, Any] = {
        "bound": cert.bound,
        "method": cert.method,
        "circles": len(cert.circles.circles),
        "points": len(cert.points),
    }
    if cert.notes:
        out["notes"] = list(cert.notes)
    if explain:
        roles = [f"{tc.role}^{tc.gadget}" for tc in cert.circles.circles]
        out["components"] = [
            {"circles": [roles[i] for i in comp], "bound": b}
            for comp, b in cert.component_bounds
        ]
        out["overlaps"] = [[roles[a], roles[b]] for a, b in cert.overlaps]
        if cert.cells is not None:
            out["cells"] = [
                {
                    "signature": [roles[i] for i in cell.signature],
                    "sample": point_to_json(cell.sample) if cell.sample else None,
                }
                for cell in cert.cells.cells
            ]
    return out


def tau_poly_to_json(tp: TauPolynomial) -> dict:
    return {
        "kind": tp.kind,
        "witness": list(tp.witness),
        "coeffs": [rat_str(c) for c in tp.coeffs],
    }


def epsilon_to_json(cert: EpsilonCertificate) -> dict:
    return {
        "k": cert.k,
        "tau_star": rat_str(cert.tau_star),
        "positive_root_bound": rat_str(cert.positive_root_bound),
        "audits": list(cert.audited_conditions),
        "halvings": cert.halvings,
    }


def solve_result_to_json(res: SolveResult) -> dict:
    return {
        "Q": point_set_to_json(res.Q) if len(res.Q) else {"points": []},
        "verified": res.verified,
        "size": res.size,
        "unblocked_history": list(res.unblocked_history),
        "rounds": res.rounds,
    }


def probe_to_json(rep: ProbeReport) -> dict:
    return {
        "best": solve_result_to_json(rep.best),
        "target": rep.target,
        "status": rep.status,
        "attempts": [list(a) for a in rep.attempts],
    }
