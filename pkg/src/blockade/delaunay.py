"""Delaunay graphs via witness-circle intervals, and the blocking predicates.

An edge ij of a point set S is a Delaunay-graph edge iff some circle through
the endpoints has empty open interior.  Circle centers on the perpendicular
bisector of ij are parameterized by the rational coefficient c of the
(non-normalized) left normal of ij: center(c) = midpoint + c * rot90(q - p).
Each third point s then excludes one open ray of parameters, with a rational
breakpoint where p, q, s are concyclic:

    s strictly inside center(c)'s circle  <=>  A < c * B,
    A = |s - m|^2 - |p - m|^2,   B = 2 * rot90(q - p) . (s - p).

B == 0 means s is collinear with p and q: s then blocks every circle (between
the endpoints) or none.  Points exactly on a circle never block it (open
interiors throughout), so witness intervals are closed at finite breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import (
    Hull,
    Point,
    convex_hull,
    dot,
    hull_classify,
    norm_sq,
    orient,
    rot90,
    sub,
)


class IdenticalPoints(Exception):
    """A point set contained duplicate points."""


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    labels: Optional[tuple[Optional[str], ...]] = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise IdenticalPoints("points must be pairwise distinct")
        if self.labels is not None and len(self.labels) != len(self.points):
            raise ValueError("labels must match points")

    def __len__(self):
        return len(self.points)

    def label(self, i: int) -> Optional[str]:
        return self.labels[i] if self.labels else None


def point_set(points: Sequence[Point], labels: Sequence[Optional[str]] | None = None) -> PointSet:
    return PointSet(tuple(points), tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class WitnessInterval:
    """Bisector parameters of empty circles through one edge.

    `lo is None` encodes -inf, `hi is None` encodes +inf.  Finite endpoints
    are closed (boundary contact does not block).  `empty` marks an edge with
    no empty witness circle at all.
    """

    edge: tuple[int, int]
    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_closed: bool
    hi_closed: bool
    empty: bool = False

    @property
    def nonempty(self) -> bool:
        return not self.empty

    def contains(self, c: Fraction) -> bool:
        if self.empty:
            return False
        if self.lo is not None and c < self.lo:
            return False
        if self.hi is not None and c > self.hi:
            return False
        return True


def _empty_interval(i: int, j: int) -> WitnessInterval:
    return WitnessInterval((i, j), Fraction(0), Fraction(0), False, False, empty=True)


def witness_interval(ps: PointSet, i: int, j: int) -> WitnessInterval:
    """Interval of bisector parameters whose circles are empty of all other points."""
    if i == j:
        raise ValueError("edge endpoints must differ")
    p, q = ps.points[i], ps.points[j]
    m = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    n = rot90(sub(q, p))
    pm = norm_sq(sub(p, m))
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for k, s in enumerate(ps.points):
        if k == i or k == j:
            continue
        a = norm_sq(sub(s, m)) - pm
        b = 2 * dot(n, sub(s, p))
        if b == 0:
            if a < 0:
                return _empty_interval(i, j)  # s sits between p and q on the chord
            continue
        c = a / b
        if b > 0:
            if hi is None or c < hi:
                hi = c
        else:
            if lo is None or c > lo:
                lo = c
    if lo is not None and hi is not None and lo > hi:
        return _empty_interval(i, j)
    return WitnessInterval((i, j), lo, hi, lo is not None, hi is not None)


def delaunay_edges(ps: PointSet) -> set[tuple[int, int]]:
    """All edges appearing in some Delaunay triangulation of ps."""
    if len(ps) < 2:
        raise ValueError("need at least two points")
    edges = set()
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if witness_interval(ps, i, j).nonempty:
                edges.add((i, j))
    return edges


@dataclass(frozen=True)
class BlockingInstance:
    P: PointSet
    Q: PointSet
    exterior_only: bool = False

    def __post_init__(self):
        if set(self.P.points) & set(self.Q.points):
            raise IdenticalPoints("P and Q must be disjoint")

    def combined(self) -> PointSet:
        labels = None
        if self.P.labels or self.Q.labels:
            labels = tuple(self.P.label(i) for i in range(len(self.P))) + tuple(
                self.Q.label(i) for i in range(len(self.Q))
            )
        return PointSet(self.P.points + self.Q.points, labels)


def is_blocked_edge(inst: BlockingInstance, i: int, j: int) -> bool:
    """True iff no circle through P[i], P[j] is empty of P u Q."""
    return witness_interval(inst.combined(), i, j).empty


@dataclass(frozen=True)
class Verdict:
    status: str  # "blocked" | "unblocked" | "exterior_violation"
    unblocked_edges: tuple[tuple[int, int], ...] = ()
    violating_points: tuple[int, ...] = ()

    @property
    def blocked(self) -> bool:
        return self.status == "blocked"


def blocks(inst: BlockingInstance) -> Verdict:
    """Decide whether Q blocks P (optionally from the exterior).

    Only Delaunay-graph edges of P alone need testing: adding points never
    creates new P-P Delaunay edges (monotonicity, enforced by tests).
    """
    if inst.exterior_only and len(inst.P) >= 1:
        hull = convex_hull(inst.P.points)
        violators = tuple(
            k for k, q in enumerate(inst.Q.points) if hull_classify(hull, q) < 0
        )
        if violators:
            return Verdict("exterior_violation", violating_points=violators)
    if len(inst.P) < 2:
        return Verdict("blocked")
    surviving = tuple(
        e for e in sorted(delaunay_edges(inst.P)) if not is_blocked_edge(inst, *e)
    )
    if surviving:
        return Verdict("unblocked", unblocked_edges=surviving)
    return Verdict("blocked")


def is_general_position(ps: PointSet) -> bool:
    """No three points collinear and no four concyclic."""
    pts = ps.points
    n = len(pts)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if orient(pts[a], pts[b], pts[c]) == 0:
                    return False
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    if cocircularity_det(pts[a], pts[b], pts[c], pts[d]) == 0:
                        return False
    return True


def cocircularity_det(p: Point, q: Point, r: Point, s: Point) -> Fraction:
    """4x4 determinant with rows (1, x, y, x^2+y^2); zero iff cocircular
    (a line counting as a circle of infinite radius)."""

    def lift(v: Point) -> tuple[Fraction, Fraction, Fraction]:
        return (v.x, v.y, v.x * v.x + v.y * v.y)

    (px, py, pw), (qx, qy, qw) = lift(p), lift(q)
    (rx, ry, rw), (sx, sy, sw) = lift(r), lift(s)
    # Subtract the first column to reduce to a 3x3 determinant.
    m = [
        [qx - px, qy - py, qw - pw],
        [rx - px, ry - py, rw - pw],
        [sx - px, sy - py, sw - pw],
    ]
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
