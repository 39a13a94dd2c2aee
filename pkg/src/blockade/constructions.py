"""Generators for the gadget point sets and their certificate circle families.

A gadget is four points {ell, m, r, t}: the template {(-2,0),(0,0),(2,0),(0,3)}
scaled by 2^-i with x-offset 3 + 14(1 - 2^-i) for gadget i.  Bottom points sit
on the x-axis, top points on the line 3x + 14y = 51.  The circle families:

  collinear family (one per gadget, H only between gadgets):
    F1: through t_i and ell_i, tangent to the x-axis at ell_i
    G1: through t_i and r_i, tangent to the x-axis at r_i
    F2: segment ell_i m_i as diameter
    G2: segment m_i r_i as diameter
    H:  segment r_i ell_{i+1} as diameter

  perturbed family (gadget interiors gain F3/G3; the ends lose F1/G1):
    F3: through t_i and m_i, tangent at t_i to segment t_i t_{i+1}
    G3: through t_i and m_i, tangent at m_i to segment ell_i m_i
    F1/G1 keep their tangency with the neighboring bottom segment.

  3k variant: m_i removed, F2/G2 replaced by I2 with diameter ell_i r_i.

The perturbation maps bottom points (x, y) -> (x, y + tau x^3) and top points
(x, y) -> (x, y - tau x^3); tau = 0 reproduces the collinear set exactly.
Every generated circle is audited: exactly two construction points on it,
none strictly inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import cos, pi, sin
from typing import Sequence

from .delaunay import PointSet
from .geometry import (
    Circle,
    Point,
    circle_from_diameter,
    circle_through_tangent_at,
    in_circle_sign,
    rat,
    sub,
)


class InvalidK(Exception):
    pass


class EmptinessViolated(Exception):
    """A family circle captured a construction point in its open interior
    (or lost one of its two incident points) -- the signal that tau is too big."""

    def __init__(self, role: str, gadget: int, detail: str):
        super().__init__(f"{role}^({gadget}): {detail}")
        self.role = role
        self.gadget = gadget
        self.detail = detail


@dataclass(frozen=True)
class Gadget:
    index: int
    ell: Point
    m: Point
    r: Point
    t: Point

    def bottom(self) -> tuple[Point, Point, Point]:
        return (self.ell, self.m, self.r)


@dataclass(frozen=True)
class TaggedCircle:
    role: str  # F1 G1 F2 G2 H F3 G3 I2
    gadget: int
    circle: Circle


@dataclass(frozen=True)
class CircleFamily:
    circles: tuple[TaggedCircle, ...]

    def __len__(self):
        return len(self.circles)

    def find(self, role: str, gadget: int) -> TaggedCircle:
        for tc in self.circles:
            if tc.role == role and tc.gadget == gadget:
                return tc
        raise KeyError(f"{role}^({gadget}) not in family")


@dataclass(frozen=True)
class PerturbedSet:
    base: tuple[Gadget, ...]
    tau: Fraction
    gadgets: tuple[Gadget, ...]
    points: PointSet


def build_p0(k: int) -> tuple[PointSet, list[Gadget]]:
    """The 4k-point collinear construction."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    gadgets = []
    pts: list[Point] = []
    labels: list[str] = []
    for i in range(1, k + 1):
        scale = Fraction(1, 2**i)
        offset = 3 + 14 * (1 - scale)
        g = Gadget(
            index=i,
            ell=Point(offset - 2 * scale, Fraction(0)),
            m=Point(offset, Fraction(0)),
            r=Point(offset + 2 * scale, Fraction(0)),
            t=Point(offset, 3 * scale),
        )
        gadgets.append(g)
        pts.extend([g.ell, g.m, g.r, g.t])
        labels.extend([f"ell_{i}", f"m_{i}", f"r_{i}", f"t_{i}"])
    return PointSet(tuple(pts), tuple(labels)), gadgets


def perturb(base: Sequence[Gadget], tau) -> PerturbedSet:
    """Exact image of the gadgets under the cubic shear."""
    tau = rat(tau)
    if tau < 0:
        raise ValueError("tau must be nonnegative")

    def up(p: Point) -> Point:
        return Point(p.x, p.y + tau * p.x**3)

    def down(p: Point) -> Point:
        return Point(p.x, p.y - tau * p.x**3)

    moved = []
    pts: list[Point] = []
    labels: list[str] = []
    for g in base:
        ng = Gadget(g.index, up(g.ell), up(g.m), up(g.r), down(g.t))
        moved.append(ng)
        pts.extend([ng.ell, ng.m, ng.r, ng.t])
        i = g.index
        labels.extend([f"ell_{i}", f"m_{i}", f"r_{i}", f"t_{i}"])
    return PerturbedSet(tuple(base), tau, tuple(moved), PointSet(tuple(pts), tuple(labels)))


def audit_emptiness(points: PointSet, family: CircleFamily) -> None:
    """Every circle: exactly two construction points on it, none strictly inside."""
    for tc in family.circles:
        on = 0
        for idx, p in enumerate(points.points):
            s = in_circle_sign(tc.circle, p)
            if s < 0:
                label = points.label(idx) or str(idx)
                raise EmptinessViolated(tc.role, tc.gadget, f"{label} strictly inside")
            if s == 0:
                on += 1
        if on != 2:
            raise EmptinessViolated(tc.role, tc.gadget, f"{on} incident points, expected 2")


def build_c0(gadgets: Sequence[Gadget]) -> CircleFamily:
    """The 5k-1 circles of the collinear family (audited)."""
    if not gadgets:
        raise InvalidK("need at least one gadget")
    circles: list[TaggedCircle] = []
    k = len(gadgets)
    for pos, g in enumerate(gadgets):
        i = g.index
        circles.append(TaggedCircle("F1", i, circle_through_tangent_at(g.ell, g.t, (1, 0))))
        circles.append(TaggedCircle("G1", i, circle_through_tangent_at(g.r, g.t, (1, 0))))
        circles.append(TaggedCircle("F2", i, circle_from_diameter(g.ell, g.m)))
        circles.append(TaggedCircle("G2", i, circle_from_diameter(g.m, g.r)))
        if pos < k - 1:
            circles.append(TaggedCircle("H", i, circle_from_diameter(g.r, gadgets[pos + 1].ell)))
    family = CircleFamily(tuple(circles))
    pts = PointSet(tuple(p for g in gadgets for p in (g.ell, g.m, g.r, g.t)))
    audit_emptiness(pts, family)
    return family


def build_c0_prime(base: Sequence[Gadget], tau) -> CircleFamily:
    """The 7k-9 circle family over the perturbed points.

    Gadget boundary cases are table-driven: the first and last gadget keep
    only their diameter circles (plus H for the first); interior gadgets get
    the full set {F1, G1, F2, G2, F3, G3, H?}.  All tangency constraints are
    re-solved from scratch at the given tau.
    """
    k = len(base)
    if k < 2:
        raise InvalidK("the perturbed family needs k >= 2")
    ps = perturb(base, tau)
    gs = ps.gadgets
    circles: list[TaggedCircle] = []
    for pos, g in enumerate(gs):
        i = g.index
        interior = 0 < pos < k - 1
        if interior:
            prev_r = gs[pos - 1].r
            next_ell = gs[pos + 1].ell
            next_t = gs[pos + 1].t
            circles.append(
                TaggedCircle("F1", i, circle_through_tangent_at(g.ell, g.t, sub(g.ell, prev_r)))
            )
            circles.append(
                TaggedCircle("G1", i, circle_through_tangent_at(g.r, g.t, sub(next_ell, g.r)))
            )
            circles.append(
                TaggedCircle("F3", i, circle_through_tangent_at(g.t, g.m, sub(next_t, g.t)))
            )
            circles.append(
                TaggedCircle("G3", i, circle_through_tangent_at(g.m, g.t, sub(g.m, g.ell)))
            )
        circles.append(TaggedCircle("F2", i, circle_from_diameter(g.ell, g.m)))
        circles.append(TaggedCircle("G2", i, circle_from_diameter(g.m, g.r)))
        if pos < k - 1:
            circles.append(TaggedCircle("H", i, circle_from_diameter(g.r, gs[pos + 1].ell)))
    family = CircleFamily(tuple(circles))
    audit_emptiness(ps.points, family)
    return family


def general_construction(k: int, tau) -> tuple[PerturbedSet, CircleFamily]:
    """Perturbed points plus their circle family in one call."""
    _, base = build_p0(k)
    ps = perturb(base, tau)
    return ps, build_c0_prime(base, tau)


def build_alt_3k(k: int) -> tuple[PointSet, CircleFamily]:
    """The 3k-point variant: middle points removed, I2 on diameter ell_i r_i."""
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    _, gadgets = build_p0(k)
    pts: list[Point] = []
    labels: list[str] = []
    circles: list[TaggedCircle] = []
    for pos, g in enumerate(gadgets):
        i = g.index
        pts.extend([g.ell, g.r, g.t])
        labels.extend([f"ell_{i}", f"r_{i}", f"t_{i}"])
        circles.append(TaggedCircle("F1", i, circle_through_tangent_at(g.ell, g.t, (1, 0))))
        circles.append(TaggedCircle("G1", i, circle_through_tangent_at(g.r, g.t, (1, 0))))
        circles.append(TaggedCircle("I2", i, circle_from_diameter(g.ell, g.r)))
        if pos < k - 1:
            circles.append(TaggedCircle("H", i, circle_from_diameter(g.r, gadgets[pos + 1].ell)))
    ps = PointSet(tuple(pts), tuple(labels))
    family = CircleFamily(tuple(circles))
    audit_emptiness(ps, family)
    return ps, family


def regular_ngon(n: int, denominator_cap: int = 2**16) -> PointSet:
    """Rational approximation of a regular n-gon with circumradius 1.

    Coordinates are snapped by continued-fraction rounding; all downstream
    geometry is exact on the snapped points.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    pts = []
    for j in range(n):
        a = 2 * pi * j / n
        x = Fraction(cos(a)).limit_denominator(denominator_cap)
        y = Fraction(sin(a)).limit_denominator(denominator_cap)
        pts.append(Point(x, y))
    return PointSet(tuple(pts), tuple(f"v_{j}" for j in range(n)))
