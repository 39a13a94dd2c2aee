"""Deterministic SVG rendering of points, circles, hulls and blockers.

Rationals are formatted at 12 significant digits for display only; nothing
rendered here ever feeds back into a computation.
"""

from __future__ import annotations

from math import sqrt
from typing import Optional

from .constructions import CircleFamily
from .delaunay import PointSet
from .geometry import convex_hull

_PALETTE = {
    "F1": "#c0392b",
    "G1": "#2980b9",
    "F2": "#d35400",
    "G2": "#16a085",
    "F3": "#8e44ad",
    "G3": "#27ae60",
    "H": "#7f8c8d",
    "I2": "#d35400",
}


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def render_svg(
    points: PointSet,
    circles: Optional[CircleFamily] = None,
    blockers: Optional[PointSet] = None,
    show_hull: bool = True,
    width: int = 900,
) -> str:
    """Scene in the visual language of the construction figures."""
    xs = [float(p.x) for p in points.points]
    ys = [float(p.y) for p in points.points]
    radii = []
    if circles:
        for tc in circles.circles:
            r = sqrt(float(tc.circle.radius_sq))
            radii.append(r)
            xs.extend([float(tc.circle.center.x) - r, float(tc.circle.center.x) + r])
            ys.extend([float(tc.circle.center.y) - r, float(tc.circle.center.y) + r])
    if blockers:
        xs.extend(float(p.x) for p in blockers.points)
        ys.extend(float(p.y) for p in blockers.points)
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span_x = max(max_x - min_x, 1e-9)
    span_y = max(max_y - min_y, 1e-9)
    pad = 0.06 * max(span_x, span_y)
    scale = width / (span_x + 2 * pad)
    height = (span_y + 2 * pad) * scale

    def tx(x: float) -> float:
        return (x - min_x + pad) * scale

    def ty(y: float) -> float:
        return height - (y - min_y + pad) * scale  # y up

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if show_hull and len(points.points) >= 3:
        hull = convex_hull(points.points)
        pts = " ".join(f"{_fmt(tx(float(v.x)))},{_fmt(ty(float(v.y)))}" for v in hull.vertices)
        out.append(
            f'<polygon points="{pts}" fill="#ecf0f1" stroke="#bdc3c7" stroke-width="1"/>'
        )
    if circles:
        for tc in circles.circles:
            r = sqrt(float(tc.circle.radius_sq)) * scale
            color = _PALETTE.get(tc.role, "#333333")
            out.append(
                f'<circle cx="{_fmt(tx(float(tc.circle.center.x)))}" '
                f'cy="{_fmt(ty(float(tc.circle.center.y)))}" r="{_fmt(r)}" '
                f'fill="none" stroke="{color}" stroke-width="1.2">'
                f"<title>{tc.role}^({tc.gadget})</title></circle>"
            )
    for i, p in enumerate(points.points):
        label = points.label(i)
        out.append(
            f'<circle cx="{_fmt(tx(float(p.x)))}" cy="{_fmt(ty(float(p.y)))}" '
            f'r="3.5" fill="#2c3e50">'
            + (f"<title>{label}</title>" if label else "")
            + "</circle>"
        )
    if blockers:
        for p in blockers.points:
            out.append(
                f'<circle cx="{_fmt(tx(float(p.x)))}" cy="{_fmt(ty(float(p.y)))}" '
                f'r="3.5" fill="#e74c3c"/>'
            )
    out.append("</svg>")
    return "\n".join(out)
