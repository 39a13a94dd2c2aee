"""Machine-checkable lower bounds on exterior-blocking numbers.

Every circle of a verified family (two incident points, empty open interior)
must contain a blocking point in its open interior, and in the exterior
variant that point may not be strictly inside the hull.  The certifiers
exploit two sound counting schemes over the circles' *blocking areas*
(open disk interior minus the closed hull):

  disjointness: a subfamily with pairwise disjoint blocking areas forces one
  point per member.  Computed as an exact maximum independent set in the
  audited overlap graph.

  hitting set: within one overlap component, any legal position realizes a
  *signature* (the subset of circles whose open interior contains it); the
  minimum number of signatures covering all circles of the component is a
  sound lower bound, because every real blocking point realizes one of the
  enumerated signatures.  Signatures realizable only on the hull boundary
  are included, so boundary placements cannot beat the bound.

All region decisions are exact.  The only irrational quantities are circle
intersection corners and arc extremes, both of the shape
base + coef * sqrt(w) with a shared rational radicand, so every sign needed
reduces to `compare_sqrt_expr` / `two_radical_sign`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .constructions import CircleFamily, TaggedCircle, audit_emptiness
from .delaunay import PointSet
from .geometry import (
    Circle,
    Hull,
    Point,
    convex_hull,
    dist_sq,
    dot,
    hull_classify,
    in_circle_sign,
    norm_sq,
    radical_sign,
    rot90,
    sub,
    two_radical_sign,
)


class ArrangementOverflow(Exception):
    """A component was too big or too degenerate for the exact cell analysis."""


@dataclass(frozen=True)
class BlockingArea:
    """The open region interior(circle) minus the closed hull."""

    circle: Circle
    hull: Hull


@dataclass(frozen=True)
class RadicalPoint:
    """The point (bx + cx*sqrt(w), by + cy*sqrt(w)) with rational fields, w >= 0."""

    bx: Fraction
    by: Fraction
    cx: Fraction
    cy: Fraction
    w: Fraction

    def approx(self) -> tuple[float, float]:
        root = float(self.w) ** 0.5
        return (float(self.bx) + float(self.cx) * root, float(self.by) + float(self.cy) * root)


def rational_radical_point(p: Point) -> RadicalPoint:
    return RadicalPoint(p.x, p.y, Fraction(0), Fraction(0), Fraction(0))


def radical_point_in_disk_sign(rp: RadicalPoint, c: Circle) -> int:
    """-1 strictly inside, 0 on, +1 outside; exact."""
    dx, dy = rp.bx - c.center.x, rp.by - c.center.y
    a = dx * dx + dy * dy + rp.w * (rp.cx * rp.cx + rp.cy * rp.cy) - c.radius_sq
    b = 2 * (rp.cx * dx + rp.cy * dy)
    return radical_sign(a, b, rp.w)


def radical_point_edge_sign(rp: RadicalPoint, n: tuple[Fraction, Fraction], offset: Fraction) -> int:
    """Sign of n . point - offset."""
    a = n[0] * rp.bx + n[1] * rp.by - offset
    b = n[0] * rp.cx + n[1] * rp.cy
    return radical_sign(a, b, rp.w)


def radical_point_hull_sign(rp: RadicalPoint, hull: Hull) -> int:
    """+1 strictly outside, 0 on the boundary, -1 strictly inside (proper hulls)."""
    if len(hull.vertices) < 3:
        raise ArrangementOverflow("degenerate hull has no interior")
    on_boundary = False
    for a, b in hull.edges():
        n = rot90(sub(b, a))  # inward-positive for ccw hulls
        s = radical_point_edge_sign(rp, n, dot(n, (a.x, a.y)))
        if s < 0:
            return 1
        if s == 0:
            on_boundary = True
    return 0 if on_boundary else -1


def circle_intersection_points(a: Circle, b: Circle) -> list[RadicalPoint]:
    """0, 1 (tangency) or 2 intersection points of the two circles."""
    d = sub(b.center, a.center)
    d2 = norm_sq(d)
    if d2 == 0:
        return []
    t = (d2 + a.radius_sq - b.radius_sq) / (2 * d2)
    h2 = a.radius_sq - t * t * d2
    if h2 < 0:
        return []
    foot_x = a.center.x + t * d[0]
    foot_y = a.center.y + t * d[1]
    w = h2 / d2
    if w == 0:
        return [RadicalPoint(foot_x, foot_y, Fraction(0), Fraction(0), Fraction(0))]
    perp = rot90(d)
    return [
        RadicalPoint(foot_x, foot_y, perp[0], perp[1], w),
        RadicalPoint(foot_x, foot_y, -perp[0], -perp[1], w),
    ]


def pair_foot(a: Circle, b: Circle) -> Optional[Point]:
    """Deepest rational point of a proper lens (radical-axis foot), else None."""
    d = sub(b.center, a.center)
    d2 = norm_sq(d)
    if d2 == 0:
        return None
    t = (d2 + a.radius_sq - b.radius_sq) / (2 * d2)
    if a.radius_sq - t * t * d2 <= 0:
        return None
    return Point(a.center.x + t * d[0], a.center.y + t * d[1])


def lower_intersection_point(a: Circle, b: Circle) -> Optional[RadicalPoint]:
    """The intersection point with the smaller y (ties broken by smaller x)."""
    pts = circle_intersection_points(a, b)
    if len(pts) < 2:
        return pts[0] if pts else None
    first = pts[0]
    # The pair shares base and w with opposite coef: lower y <=> sign of cy.
    if first.cy > 0:
        return pts[1]
    if first.cy < 0:
        return pts[0]
    if first.cx > 0:
        return pts[1]
    return pts[0]


def _disks_disjoint_sign(a: Circle, b: Circle) -> int:
    """Sign of |c_a - c_b| - (r_a + r_b): >= 0 means the open disks miss."""
    d2 = dist_sq(a.center, b.center)
    return radical_sign(d2 - a.radius_sq - b.radius_sq, -2, a.radius_sq * b.radius_sq)


def _disk_contained_sign(a: Circle, b: Circle) -> int:
    """Sign of |c_a - c_b| - |r_a - r_b|: <= 0 means one closed disk inside the other."""
    d2 = dist_sq(a.center, b.center)
    return radical_sign(d2 - a.radius_sq - b.radius_sq, 2, a.radius_sq * b.radius_sq)


def _hull_edge_data(hull: Hull) -> list[tuple[tuple[Fraction, Fraction], Fraction]]:
    """(outward normal, offset) per edge: f(x) = n.x - offset > 0 iff beyond."""
    out = []
    for a, b in hull.edges():
        e = sub(b, a)
        n = (e[1], -e[0])  # clockwise quarter-turn: outward for ccw hulls
        out.append((n, dot(n, (a.x, a.y))))
    return out


def _max_candidates(disks: Sequence[Circle], n: tuple[Fraction, Fraction]) -> list[RadicalPoint]:
    """Candidate maximizers of the linear functional n.x over the closed
    intersection of the disks: per-disk arc extremes plus pairwise corners."""
    cands: list[RadicalPoint] = []
    nn = norm_sq(n)
    for c in disks:
        cands.append(
            RadicalPoint(c.center.x, c.center.y, n[0], n[1], c.radius_sq / nn)
        )
    for a, b in itertools.combinations(disks, 2):
        cands.extend(circle_intersection_points(a, b))
    return cands


def exists_point_beyond(
    disks: Sequence[Circle], n: tuple[Fraction, Fraction], offset: Fraction
) -> bool:
    """Is max { n.x - offset } over the closed intersection of disks > 0?

    The maximizer of a linear functional over the compact intersection lies
    at a per-disk arc extreme or a pairwise corner, so checking the valid
    candidates is exhaustive.
    """
    for cand in _max_candidates(disks, n):
        if any(radical_point_in_disk_sign(cand, d) > 0 for d in disks):
            continue
        if radical_point_edge_sign(cand, n, offset) > 0:
            return True
    return False


def blocking_area_nonempty(circle: Circle, hull: Hull) -> bool:
    """Is interior(circle) minus the closed hull nonempty?"""
    if len(hull.vertices) < 3:
        return True  # a segment or point never swallows an open disk
    for n, offset in _hull_edge_data(hull):
        if radical_sign(
            dot(n, (circle.center.x, circle.center.y)) - offset,
            1,
            circle.radius_sq * norm_sq(n),
        ) > 0:
            return True
    return False


def areas_disjoint(a: BlockingArea, b: BlockingArea) -> bool:
    """Is interior(C_a) /\\ interior(C_b) /\\ exterior(hull) empty?

    Disjoint-or-tangent disks: trivially true.  Otherwise the open lens
    (or the smaller disk, in the containment case) is a nonempty open convex
    set; it avoids the exterior iff no hull edge functional goes positive
    over its closure, decided exactly at arc extremes and lens corners.
    """
    if a.hull != b.hull:
        raise ValueError("areas must be built over the same hull")
    ca, cb = a.circle, b.circle
    if ca == cb:
        return not blocking_area_nonempty(ca, a.hull)
    if _disks_disjoint_sign(ca, cb) >= 0:
        return True
    if len(a.hull.vertices) < 3:
        return False  # nonempty open lens cannot hide inside a degenerate hull
    if _disk_contained_sign(ca, cb) <= 0:
        small = ca if ca.radius_sq <= cb.radius_sq else cb
        return not blocking_area_nonempty(small, a.hull)
    for n, offset in _hull_edge_data(a.hull):
        if exists_point_beyond((ca, cb), n, offset):
            return False
    return True


# ---------------------------------------------------------------------------
# exact region-nonemptiness for small disk bundles


def _strictly_inside_all(p: Point, disks: Sequence[Circle]) -> bool:
    return all(in_circle_sign(d, p) < 0 for d in disks)


def _radical_strictly_inside_all(rp: RadicalPoint, disks: Sequence[Circle]) -> bool:
    return all(radical_point_in_disk_sign(rp, d) < 0 for d in disks)


def open_intersection_witness(disks: Sequence[Circle]) -> Optional[RadicalPoint]:
    """A point strictly inside every open disk, or None when the open
    intersection is empty.

    Witness candidates: disk centers, radical-axis feet of proper lenses, and
    pairwise corners nudged toward their pair's foot (strict convexity makes
    every interior point of the corner-to-foot segment strictly interior to
    the pair, and a small enough rational step keeps the strict margins of
    the remaining disks).
    """
    if not disks:
        raise ValueError("need at least one disk")
    for d in disks:
        if _strictly_inside_all(d.center, disks):
            return rational_radical_point(d.center)
    feet: dict[tuple[int, int], Point] = {}
    for i, j in itertools.combinations(range(len(disks)), 2):
        foot = pair_foot(disks[i], disks[j])
        if foot is None:
            continue
        feet[(i, j)] = foot
        if _strictly_inside_all(foot, disks):
            return rational_radical_point(foot)
    had_weak_candidate = False
    for (i, j), foot in feet.items():
        for corner in circle_intersection_points(disks[i], disks[j]):
            if any(radical_point_in_disk_sign(corner, d) > 0 for d in disks):
                continue
            had_weak_candidate = True
            lam = Fraction(1, 2)
            for _ in range(200):
                z = RadicalPoint(
                    corner.bx + lam * (foot.x - corner.bx),
                    corner.by + lam * (foot.y - corner.by),
                    (1 - lam) * corner.cx,
                    (1 - lam) * corner.cy,
                    corner.w,
                )
                if _radical_strictly_inside_all(z, disks):
                    return z
                lam /= 2
    if had_weak_candidate:
        # Tangency-grade degeneracy the nudging could not resolve.
        raise ArrangementOverflow("could not separate a weakly-touching disk bundle")
    return None


def _edge_interval_nonempty(
    disks: Sequence[Circle], a: Point, b: Point
) -> bool:
    """Does the open segment-parameter set { t in [0,1] : a + t(b-a) strictly
    inside every disk } contain a point?  All endpoint comparisons are
    single- or two-radical signs."""
    e = sub(b, a)
    ee = norm_sq(e)
    los: list[tuple[Fraction, Fraction, Fraction]] = []  # value = p + q*sqrt(w)
    his: list[tuple[Fraction, Fraction, Fraction]] = []
    for d in disks:
        am = sub(a, d.center)
        beta = dot(e, am)
        gamma = norm_sq(am) - d.radius_sq
        disc = beta * beta - ee * gamma
        if disc <= 0:
            return False  # the line misses (or touches) this disk
        los.append((-beta / ee, Fraction(-1), disc / (ee * ee)))
        his.append((-beta / ee, Fraction(1), disc / (ee * ee)))
    for lo in los:
        # lo < 1
        if radical_sign(lo[0] - 1, lo[1], lo[2]) >= 0:
            return False
        for hi in his:
            if two_radical_sign(lo[0] - hi[0], lo[1], lo[2], -hi[1], hi[2]) >= 0:
                return False
    for hi in his:
        if radical_sign(hi[0], hi[1], hi[2]) <= 0:
            return False
    return True


def region_outside_nonempty(disks: Sequence[Circle], hull: Hull) -> bool:
    """Is (intersection of open disks) /\\ (complement of the open hull
    interior) nonempty?  Boundary positions count: a blocker may sit on the
    hull boundary."""
    if len(hull.vertices) < 3:
        return open_intersection_witness(disks) is not None
    if open_intersection_witness(disks) is None:
        return False
    for n, offset in _hull_edge_data(hull):
        if exists_point_beyond(disks, n, offset):
            return True
    for a, b in hull.edges():
        if _edge_interval_nonempty(disks, a, b):
            return True
    return False


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Cell:
    signature: tuple[int, ...]  # indices into the family
    sample: Optional[Point]  # rational witness with exactly this membership


@dataclass(frozen=True)
class CellHypergraph:
    cells: tuple[Cell, ...]

    def circle_to_cells(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for ci, cell in enumerate(self.cells):
            for circ in cell.signature:
                out.setdefault(circ, []).append(ci)
        return {k: tuple(v) for k, v in out.items()}


@dataclass(frozen=True)
class Certificate:
    points: PointSet
    circles: CircleFamily
    bound: int
    method: str  # "disjointness" | "hitting_set"
    component_bounds: tuple[tuple[tuple[int, ...], int], ...] = ()
    overlaps: tuple[tuple[int, int], ...] = ()
    cells: Optional[CellHypergraph] = None
    notes: tuple[str, ...] = ()


def _eligible_and_overlaps(
    points: PointSet, family: CircleFamily
) -> tuple[Hull, list[int], list[tuple[int, int]]]:
    audit_emptiness(points, family)
    hull = convex_hull(points.points)
    eligible = [
        i
        for i, tc in enumerate(family.circles)
        if blocking_area_nonempty(tc.circle, hull)
    ]
    overlaps = []
    for a, b in itertools.combinations(eligible, 2):
        ba = BlockingArea(family.circles[a].circle, hull)
        bb = BlockingArea(family.circles[b].circle, hull)
        if not areas_disjoint(ba, bb):
            overlaps.append((a, b))
    return hull, eligible, overlaps


def _components(nodes: Sequence[int], edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: dict[int, set[int]] = {n: set() for n in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    comps = []
    for n in nodes:
        if n in seen:
            continue
        stack, comp = [n], []
        seen.add(n)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _max_independent_set(nodes: Sequence[int], edges: set[tuple[int, int]]) -> int:
    """Exact MIS size by branch and bound (components are tiny)."""
    nodes = list(nodes)
    adj = {n: set() for n in nodes}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    best = 0

    def rec(remaining: list[int], size: int) -> None:
        nonlocal best
        if size + len(remaining) <= best:
            return
        if not remaining:
            best = max(best, size)
            return
        v = max(remaining, key=lambda n: len(adj[n] & set(remaining)))
        rest = [u for u in remaining if u != v]
        rec([u for u in rest if u not in adj[v]], size + 1)  # take v
        if adj[v] & set(remaining):
            rec(rest, size)  # skip v (only useful when v conflicts)

    rec(nodes, 0)
    return best


def disjointness_bound(points: PointSet, family: CircleFamily) -> Certificate:
    """Largest subfamily with pairwise disjoint nonempty blocking areas."""
    hull, eligible, overlaps = _eligible_and_overlaps(points, family)
    edge_set = set(overlaps)
    total = 0
    per_component = []
    for comp in _components(eligible, overlaps):
        size = _max_independent_set(comp, edge_set)
        per_component.append((tuple(comp), size))
        total += size
    return Certificate(
        points=points,
        circles=family,
        bound=total,
        method="disjointness",
        component_bounds=tuple(per_component),
        overlaps=tuple(overlaps),
    )


def _maximal_realizable_signatures(
    comp: Sequence[int], family: CircleFamily, hull: Hull, cap: int = 12
) -> list[frozenset[int]]:
    """All maximal subsets of the component realizable by one legal point.

    Realizability is downward closed, so a breadth-first growth with
    memoization enumerates the whole lattice cheaply for small components.
    """
    if len(comp) > cap:
        raise ArrangementOverflow(f"component of {len(comp)} circles exceeds the cap")
    realizable: set[frozenset[int]] = set()
    frontier = []
    for c in comp:
        s = frozenset([c])
        if region_outside_nonempty([family.circles[c].circle], hull):
            realizable.add(s)
            frontier.append(s)
    while frontier:
        nxt = []
        for s in frontier:
            for c in comp:
                if c in s:
                    continue
                grown = s | {c}
                if grown in realizable:
                    continue
                disks = [family.circles[i].circle for i in grown]
                if region_outside_nonempty(disks, hull):
                    realizable.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return [s for s in realizable if not any(s < t for t in realizable)]


def _min_cover(universe: frozenset[int], sets: list[frozenset[int]]) -> int:
    """Exact minimum number of sets covering the universe."""
    best = len(universe)

    def rec(uncovered: frozenset[int], used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if not uncovered:
            best = used
            return
        elem = min(uncovered, key=lambda e: sum(1 for s in sets if e in s))
        options = sorted(
            (s for s in sets if elem in s), key=lambda s: len(s & uncovered), reverse=True
        )
        for s in options:
            rec(uncovered - s, used + 1)

    rec(universe, 0)
    return best


def _find_cell_sample(
    sig: frozenset[int], comp: Sequence[int], family: CircleFamily, hull: Hull
) -> Optional[Point]:
    """Best-effort rational sample whose exact membership equals `sig`."""
    disks = [family.circles[i].circle for i in sig]
    others = [family.circles[i].circle for i in comp if i not in sig]
    try:
        witness = open_intersection_witness(disks)
    except ArrangementOverflow:
        return None
    if witness is None:
        return None
    wx, wy = witness.approx()
    targets = [(wx, wy)]
    for d in disks:
        targets.append((float(d.center.x), float(d.center.y)))
    for denom_bits in (24, 32, 48):
        for tx, ty in targets:
            for pull in (Fraction(0), Fraction(1, 8), Fraction(1, 64)):
                x = Fraction(wx + float(pull) * (tx - wx)).limit_denominator(2**denom_bits)
                y = Fraction(wy + float(pull) * (ty - wy)).limit_denominator(2**denom_bits)
                p = Point(x, y)
                if hull_classify(hull, p) < 0:
                    continue
                if not _strictly_inside_all(p, disks):
                    continue
                if any(in_circle_sign(o, p) < 0 for o in others):
                    continue
                return p
    return None


def hitting_set_bound(
    points: PointSet, family: CircleFamily, component_cap: int = 12
) -> Certificate:
    """Exact minimum hitting set over realizable signatures, per component.

    Components that overflow the exact analysis fall back to their
    disjointness value (still sound), with a note on the certificate.
    """
    hull, eligible, overlaps = _eligible_and_overlaps(points, family)
    edge_set = set(overlaps)
    total = 0
    per_component = []
    notes = []
    cells: list[Cell] = []
    for comp in _components(eligible, overlaps):
        try:
            maximal = _maximal_realizable_signatures(comp, family, hull, cap=component_cap)
            size = _min_cover(frozenset(comp), maximal)
            for sig in sorted(maximal, key=sorted):
                sample = _find_cell_sample(sig, comp, family, hull)
                cells.append(Cell(tuple(sorted(sig)), sample))
        except ArrangementOverflow as exc:
            size = _max_independent_set(comp, edge_set)
            notes.append(f"component {tuple(comp)} fell back to disjointness: {exc}")
        per_component.append((tuple(comp), size))
        total += size
    return Certificate(
        points=points,
        circles=family,
        bound=total,
        method="hitting_set",
        component_bounds=tuple(per_component),
        overlaps=tuple(overlaps),
        cells=CellHypergraph(tuple(cells)),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# group structure used by the perturbation audits


def group_of(tc: TaggedCircle) -> tuple[int, str]:
    kind = "F" if tc.role in ("F1", "F2", "F3") else "G" if tc.role in ("G1", "G2", "G3") else tc.role
    return (tc.gadget, kind)


def cross_group_overlaps(hull: Hull, family: CircleFamily) -> list[tuple[str, str]]:
    """Pairs of circles from different groups whose blocking areas overlap.

    The per-gadget F-group, G-group and H must be mutually disjoint for the
    per-gadget counting to add up; overlaps inside a group are expected and
    are not reported here.
    """
    offenders = []
    for a, b in itertools.combinations(range(len(family.circles)), 2):
        ta, tb = family.circles[a], family.circles[b]
        if group_of(ta) == group_of(tb):
            continue
        ba = BlockingArea(ta.circle, hull)
        bb = BlockingArea(tb.circle, hull)
        if not areas_disjoint(ba, bb):
            offenders.append((f"{ta.role}^{ta.gadget}", f"{tb.role}^{tb.gadget}"))
    return offenders
