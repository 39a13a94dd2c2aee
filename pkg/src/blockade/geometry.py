"""Exact rational plane geometry.

Everything in this module works over arbitrary-precision rationals
(`fractions.Fraction`).  No predicate ever rounds: orientation and circle
membership are signs of rational determinants, circles store the *squared*
radius so containment tests stay rational, and comparisons that genuinely
involve one square root (circle/line extremal tests) are decided by case
analysis and squaring in `compare_sqrt_expr`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


class GeometryError(Exception):
    pass


class DegenerateCircle(GeometryError):
    """Zero-radius circle (or a diameter with coincident endpoints)."""


class NoSolution(GeometryError):
    """The requested construction has no (finite) solution."""


def rat(value: RatLike) -> Fraction:
    """Coerce ints, Fractions and strings like '13/12' to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Canonical 'num/den' form: lowest terms, positive denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Point:
    """A plane point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def pt(x: RatLike, y: RatLike) -> Point:
    return Point(rat(x), rat(y))


@dataclass(frozen=True)
class Circle:
    """A circle with rational center and rational squared radius.

    The radius itself is never materialized; every containment test reduces
    to comparing rational squared distances against `radius_sq`.
    """

    center: Point
    radius_sq: Fraction

    def __post_init__(self):
        if self.radius_sq <= 0:
            raise DegenerateCircle(f"radius_sq must be positive, got {self.radius_sq}")


@dataclass(frozen=True)
class Hull:
    """A convex chain: strictly convex vertices in counterclockwise order.

    `collinear_boundary` is set when some input point lies on the boundary
    without being a vertex (the degenerate-by-design constructions trip it).
    """

    vertices: tuple[Point, ...]
    collinear_boundary: bool = False

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        n = len(v)
        if n < 2:
            return []
        if n == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % n]) for i in range(n)]


def sub(a: Point, b: Point) -> tuple[Fraction, Fraction]:
    return (a.x - b.x, a.y - b.y)


def dot(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def norm_sq(u: tuple[Fraction, Fraction]) -> Fraction:
    return u[0] * u[0] + u[1] * u[1]


def dist_sq(a: Point, b: Point) -> Fraction:
    return norm_sq(sub(a, b))


def rot90(u: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Counterclockwise quarter turn."""
    return (-u[1], u[0])


def _sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the orientation determinant: +1 left turn, 0 collinear, -1 right."""
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def in_circle_sign(c: Circle, p: Point) -> int:
    """-1 strictly inside the open disk, 0 on the boundary, +1 strictly outside."""
    return _sign(dist_sq(p, c.center) - c.radius_sq)


def circle_from_diameter(a: Point, b: Point) -> Circle:
    """The circle having segment ab as diameter."""
    if a == b:
        raise DegenerateCircle("diameter endpoints coincide")
    center = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    return Circle(center, dist_sq(a, b) / 4)


def circle_through_tangent_at(
    p: Point, q: Point, tangent_dir: tuple[RatLike, RatLike]
) -> Circle:
    """Circle through p and q that is tangent at p to the line through p with
    direction `tangent_dir`.

    The center lies on the perpendicular to the tangent at p, so one linear
    equation pins it down exactly.  Raises NoSolution when q lies on the
    tangent line (the center escapes to infinity).
    """
    d = (rat(tangent_dir[0]), rat(tangent_dir[1]))
    if d == (0, 0):
        raise NoSolution("tangent direction must be nonzero")
    n = rot90(d)
    denom = 2 * dot(n, sub(q, p))
    if denom == 0:
        raise NoSolution("q lies on the tangent line; no finite circle exists")
    h = dist_sq(p, q) / denom
    center = Point(p.x + h * n[0], p.y + h * n[1])
    return Circle(center, h * h * norm_sq(n))


def convex_hull(points: Sequence[Point]) -> Hull:
    """Convex hull with strictly convex vertices, counterclockwise.

    Points that land on the hull boundary without being corners are dropped
    from the vertex list and reported through `collinear_boundary`.
    """
    if not points:
        raise ValueError("convex_hull of empty set")
    distinct = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(distinct) == 1:
        return Hull((distinct[0],), collinear_boundary=len(points) > 1)
    if all(orient(distinct[0], distinct[-1], p) == 0 for p in distinct):
        # Fully collinear input: the hull degenerates to a segment.
        return Hull((distinct[0], distinct[-1]), collinear_boundary=len(distinct) > 2)

    def half(pts: list[Point]) -> list[Point]:
        chain: list[Point] = []
        for p in pts:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(distinct)
    upper = half(distinct[::-1])
    verts = lower[:-1] + upper[:-1]
    start = min(range(len(verts)), key=lambda i: (verts[i].x, verts[i].y))
    verts = verts[start:] + verts[:start]
    bare = Hull(tuple(verts), collinear_boundary=False)
    vert_set = set(verts)
    flagged = any(
        p not in vert_set and hull_classify(bare, p) == 0 for p in distinct
    )
    return Hull(tuple(verts), collinear_boundary=flagged) if flagged else bare


def _on_segment(a: Point, b: Point, x: Point) -> bool:
    if orient(a, b, x) != 0:
        return False
    return (
        min(a.x, b.x) <= x.x <= max(a.x, b.x)
        and min(a.y, b.y) <= x.y <= max(a.y, b.y)
    )


def hull_classify(hull: Hull, x: Point) -> int:
    """+1 strictly outside, 0 on the boundary, -1 strictly inside.

    Degenerate hulls (a point or a segment) have empty interior, so the
    answer is never -1 for them.
    """
    v = hull.vertices
    if len(v) == 1:
        return 0 if x == v[0] else 1
    if len(v) == 2:
        return 0 if _on_segment(v[0], v[1], x) else 1
    on_boundary = False
    for a, b in hull.edges():
        s = orient(a, b, x)
        if s < 0:
            return 1
        if s == 0:
            on_boundary = True
    return 0 if on_boundary else -1


def strictly_outside(hull: Hull, x: Point) -> bool:
    """True iff x is strictly beyond some hull edge's supporting line."""
    return hull_classify(hull, x) > 0


def in_convex_position(points: Sequence[Point]) -> bool:
    """All points are (strict) hull vertices."""
    hull = convex_hull(points)
    return not hull.collinear_boundary and len(hull.vertices) == len(set(points))


def compare_sqrt_expr(a: RatLike, b: RatLike, c: RatLike, d: RatLike) -> int:
    """Exact sign of a + b*sqrt(c) - d for rationals with c >= 0."""
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    if c < 0:
        raise ValueError("radicand must be nonnegative")
    e = a - d
    if b == 0 or c == 0:
        return _sign(e)
    if e == 0:
        return _sign(b)
    se, sb = _sign(e), _sign(b)
    if se == sb:
        return se
    # Opposite signs: compare e^2 against b^2 c; the larger magnitude wins.
    cmp = _sign(e * e - b * b * c)
    if cmp == 0:
        return 0
    return se if cmp > 0 else sb


def radical_sign(a: RatLike, b: RatLike, c: RatLike) -> int:
    """Sign of a + b*sqrt(c)."""
    return compare_sqrt_expr(a, b, c, 0)


def two_radical_sign(e: RatLike, f: RatLike, c1: RatLike, g: RatLike, c2: RatLike) -> int:
    """Exact sign of e + f*sqrt(c1) + g*sqrt(c2), all rational, c1,c2 >= 0.

    Reduced to single-radical signs by one squaring: compare T = e + f*sqrt(c1)
    against -g*sqrt(c2).
    """
    e, f, g = rat(e), rat(f), rat(g)
    c1, c2 = rat(c1), rat(c2)
    if g == 0 or c2 == 0:
        return radical_sign(e, f, c1)
    if f == 0 or c1 == 0:
        return radical_sign(e, g, c2)
    t = radical_sign(e, f, c1)  # sign of T
    u = -_sign(g)  # sign of U = -g*sqrt(c2), never 0 here
    if t == 0:
        return _sign(g)  # total reduces to g*sqrt(c2)
    if t != u:
        # T and -(-g sqrt(c2)) straddle zero: T's side decides.
        return t
    # Same nonzero sign: compare T^2 vs U^2 = g^2 c2.
    # T^2 = e^2 + f^2 c1 + 2 e f sqrt(c1).
    cmp = compare_sqrt_expr(e * e + f * f * c1, 2 * e * f, c1, g * g * c2)
    if cmp == 0:
        return 0
    return t if cmp > 0 else -t
