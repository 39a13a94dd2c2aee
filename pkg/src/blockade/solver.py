"""Upper-bound search: construct small (exterior-)blocking sets.

Exploration is allowed to be inexact -- candidate positions come from float
geometry snapped to rationals by continued-fraction rounding -- but acceptance
never is: a result is only `verified` after an exact blocks() check, and every
candidate's score is an exact count of witness intervals it kills.

A point s kills a surviving edge iff its exclusion ray covers the edge's whole
remaining witness interval: for an interval [lo, hi] that means s is strictly
inside both extremal witness circles; one-sided intervals additionally pin the
side of the edge line s must be on.  Edge chords themselves are fertile
ground: any point strictly between the endpoints kills every witness circle of
that edge at once, and on hull-boundary chords such points are legal exterior
blockers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Iterable, Optional, Sequence

from .delaunay import (
    BlockingInstance,
    PointSet,
    Verdict,
    blocks,
    delaunay_edges,
    witness_interval,
)
from .geometry import (
    Point,
    convex_hull,
    dot,
    hull_classify,
    in_convex_position,
    norm_sq,
    rot90,
    sub,
)


class NotConvexPosition(Exception):
    pass


@dataclass(frozen=True)
class SolverConfig:
    exterior_only: bool = False
    candidate_density: int = 3
    max_rounds: int = 64
    seed: int = 0

    def __post_init__(self):
        if self.candidate_density < 1:
            raise ValueError("candidate_density must be >= 1")


@dataclass(frozen=True)
class SolveResult:
    Q: PointSet
    verified: bool
    size: int
    unblocked_history: tuple[int, ...]
    rounds: int


@dataclass(frozen=True)
class ProbeReport:
    best: SolveResult
    target: int
    status: str  # "matched" | "inconclusive-exceeds"
    attempts: tuple[tuple[int, int], ...]  # (density, verified size or -1)


def _snap(x: float, cap: int = 2**16) -> Fraction:
    return Fraction(x).limit_denominator(cap)


def midpoint_heuristic(ps: PointSet, offset) -> PointSet:
    """One candidate blocker per hull edge, pushed outward along the normal.

    The offset is honored approximately (the exact unit normal is irrational);
    the result is NOT guaranteed to block -- run blocks() afterwards.
    """
    offset = Fraction(offset)
    if offset <= 0:
        raise ValueError("offset must be positive")
    if not in_convex_position(ps.points):
        raise NotConvexPosition("midpoint heuristic needs all points on the hull")
    hull = convex_hull(ps.points)
    out = []
    for a, b in hull.edges():
        e = sub(b, a)
        n = (e[1], -e[0])  # outward for ccw hulls
        scale = float(offset) / sqrt(float(norm_sq(n)))
        mx = float(a.x + b.x) / 2 + float(n[0]) * scale
        my = float(a.y + b.y) / 2 + float(n[1]) * scale
        cap = max(2**16, 4 * max(q.denominator for p in ps.points for q in (p.x, p.y)))
        out.append(Point(_snap(mx, cap), _snap(my, cap)))
    return PointSet(tuple(out))


def _extremal_circle(p: Point, q: Point, c: Fraction):
    """Witness circle of edge pq at bisector parameter c: (center, radius_sq)."""
    m = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    n = rot90(sub(q, p))
    center = Point(m.x + c * n[0], m.y + c * n[1])
    return center, c * c * norm_sq(n) + norm_sq(sub(p, m))


def _edge_effect(combined: PointSet, itv, i: int, j: int, s: Point) -> int:
    """2: s empties the current witness interval of edge ij; 1: s strictly
    shrinks it (an endpoint moves inward, or an infinite side becomes finite);
    0: no effect.  Shrinks matter because some edges are only killable by
    cooperating pairs whose exclusion rays overlap inside the interval."""
    if itv.empty:
        return 2
    p, q = combined.points[i], combined.points[j]
    m = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    n = rot90(sub(q, p))
    a = norm_sq(sub(s, m)) - norm_sq(sub(p, m))
    b = 2 * dot(n, sub(s, p))
    if b == 0:
        return 2 if a < 0 else 0  # on the chord: kills everything or nothing
    c = a / b
    if b > 0:
        # s excludes parameters > c.
        if itv.lo is not None and c < itv.lo:
            return 2
        if itv.hi is None or c < itv.hi:
            return 1
        return 0
    if itv.hi is not None and c > itv.hi:
        return 2
    if itv.lo is None or c > itv.lo:
        return 1
    return 0


def _legal(ps: PointSet, q_pts: Sequence[Point], cand: Point, exterior_only: bool, hull) -> bool:
    if cand in ps.points or cand in q_pts:
        return False
    if exterior_only and hull is not None and hull_classify(hull, cand) < 0:
        return False
    return True


def _edge_candidates(
    combined: PointSet, i: int, j: int, hull, density: int
) -> Iterable[Point]:
    """Float-explored positions likely to kill edge ij, snapped to rationals."""
    p, q = combined.points[i], combined.points[j]
    itv = witness_interval(combined, i, j)
    if itv.empty:
        return
    # Chord midpoint and interior chord points: kill the whole interval.
    for t_num in range(1, density + 1):
        t = Fraction(t_num, density + 1)
        yield Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))
    # Deep points of extremal witness circles, pulled slightly inward.
    params = []
    if itv.lo is not None:
        params.append(itv.lo)
    if itv.hi is not None:
        params.append(itv.hi)
    if itv.lo is not None and itv.hi is not None:
        params.append((itv.lo + itv.hi) / 2)
    span = abs(float(params[0] - params[-1])) if len(params) > 1 else Fraction(1)
    if itv.lo is None and itv.hi is not None:
        params.append(itv.hi - 1 - Fraction(float(span)).limit_denominator(64))
    if itv.hi is None and itv.lo is not None:
        params.append(itv.lo + 1 + Fraction(float(span)).limit_denominator(64))
    mx, my = float(p.x + q.x) / 2, float(p.y + q.y) / 2
    for c in params:
        center, r2 = _extremal_circle(p, q, c)
        cx, cy = float(center.x), float(center.y)
        r = sqrt(float(r2))
        # Pull from the circle center toward the chord midpoint and beyond.
        for lam in (0.0, 0.35, 0.7):
            x = cx + lam * (mx - cx)
            y = cy + lam * (my - cy)
            yield Point(_snap(x), _snap(y))
        # Hull-edge sections through this circle: strong exterior candidates.
        if hull is not None:
            for a, b in hull.edges():
                ax, ay = float(a.x), float(a.y)
                ex, ey = float(b.x) - ax, float(b.y) - ay
                ee = ex * ex + ey * ey
                if ee == 0:
                    continue
                beta = ex * (ax - cx) + ey * (ay - cy)
                gamma = (ax - cx) ** 2 + (ay - cy) ** 2 - float(r2)
                disc = beta * beta - ee * gamma
                if disc <= 0:
                    continue
                lo_t = (-beta - sqrt(disc)) / ee
                hi_t = (-beta + sqrt(disc)) / ee
                lo_t, hi_t = max(lo_t, 0.0), min(hi_t, 1.0)
                if lo_t >= hi_t:
                    continue
                for frac in range(1, density + 1):
                    t = lo_t + (hi_t - lo_t) * frac / (density + 1)
                    yield Point(_snap(ax + t * ex), _snap(ay + t * ey))


def greedy_cover_solve(ps: PointSet, cfg: SolverConfig) -> SolveResult:
    """Greedy exact-verified cover of the surviving witness intervals."""
    if len(ps) < 2:
        raise ValueError("need at least two points")
    hull = convex_hull(ps.points) if cfg.exterior_only else None
    base_edges = sorted(delaunay_edges(ps))
    q_pts: list[Point] = []
    history: list[int] = []
    rounds = 0
    for rounds in range(1, cfg.max_rounds + 1):
        combined = PointSet(ps.points + tuple(q_pts))
        surviving = [
            e for e in base_edges if not witness_interval(combined, *e).empty
        ]
        history.append(len(surviving))
        if not surviving:
            break
        intervals = {e: witness_interval(combined, *e) for e in surviving}
        seen: set[Point] = set()
        best: Optional[tuple[tuple, Point]] = None
        for e in surviving:
            for cand in _edge_candidates(combined, *e, hull=hull, density=cfg.candidate_density):
                if cand in seen:
                    continue
                seen.add(cand)
                if not _legal(ps, q_pts, cand, cfg.exterior_only, hull):
                    continue
                kills = shrinks = 0
                for se in surviving:
                    effect = _edge_effect(combined, intervals[se], *se, cand)
                    if effect == 2:
                        kills += 1
                    elif effect == 1:
                        shrinks += 1
                if kills == 0 and shrinks == 0:
                    continue
                key = (-kills, -shrinks, cand.x, cand.y)
                if best is None or key < best[0]:
                    best = (key, cand)
        if best is None:
            break  # no candidate helps; bail out with what we have
        q_pts.append(best[1])
    q = PointSet(tuple(q_pts)) if q_pts else PointSet(())
    verdict = None
    if q_pts:
        verdict = blocks(BlockingInstance(ps, q, cfg.exterior_only))
    verified = verdict is not None and verdict.blocked
    return SolveResult(q, verified, len(q_pts), tuple(history), rounds)


def conjecture_probe(ps: PointSet, budget: int = 4) -> ProbeReport:
    """Hunt for a blocking set of size |P|: the midpoint construction first
    (it has exactly |P| points when it works), then greedy escalation over
    candidate densities.

    Never reports 'refuted': failing to find a small set is not a proof.
    """
    if not in_convex_position(ps.points):
        raise NotConvexPosition("the probe expects points in convex position")
    target = len(ps)
    best: Optional[SolveResult] = None
    attempts = []
    for offset_den in (100, 1000, 20):
        cand = midpoint_heuristic(ps, Fraction(1, offset_den))
        if blocks(BlockingInstance(ps, cand, False)).blocked:
            best = SolveResult(cand, True, len(cand), (), 0)
            attempts.append((0, best.size))
            break
    if best is None or best.size > target:
        for density in range(2, 2 + max(1, budget)):
            res = greedy_cover_solve(ps, SolverConfig(candidate_density=density, seed=0))
            attempts.append((density, res.size if res.verified else -1))
            if res.verified and (best is None or res.size < best.size):
                best = res
            if best is not None and best.size <= target:
                break
    if best is None:
        raise RuntimeError("probe found no verified blocking set within budget")
    status = "matched" if best.size <= target else "inconclusive-exceeds"
    return ProbeReport(best, target, status, tuple(attempts))


def _exclusion_ray(edge_pts, s: Point):
    """How s constrains one edge's witness parameters: ('all'|'none'|'lt'|'gt', c).

    'lt': excludes parameters < c; 'gt': excludes parameters > c.
    """
    p, q = edge_pts
    m = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
    n = rot90(sub(q, p))
    a = norm_sq(sub(s, m)) - norm_sq(sub(p, m))
    b = 2 * dot(n, sub(s, p))
    if b == 0:
        return ("all", None) if a < 0 else ("none", None)
    return ("gt", a / b) if b > 0 else ("lt", a / b)


def _rays_cover(interval, rays) -> bool:
    """Do the open exclusion rays jointly cover the closed witness interval?"""
    if interval.empty:
        return True
    max_lt = None  # union of 'lt' rays = (-inf, max_lt)
    min_gt = None  # union of 'gt' rays = (min_gt, +inf)
    for kind, c in rays:
        if kind == "all":
            return True
        if kind == "lt" and (max_lt is None or c > max_lt):
            max_lt = c
        if kind == "gt" and (min_gt is None or c < min_gt):
            min_gt = c
    if max_lt is not None and min_gt is not None and min_gt < max_lt:
        return True  # the two rays overlap and cover everything
    lo_ok = interval.lo is not None and min_gt is not None and interval.lo > min_gt
    hi_ok = interval.hi is not None and max_lt is not None and interval.hi < max_lt
    if interval.lo is None and interval.hi is None:
        return False  # full line, rays do not overlap
    if interval.lo is None:
        return hi_ok
    if interval.hi is None:
        return lo_ok
    return lo_ok or hi_ok


def exhaustive_minimum(
    ps: PointSet,
    exterior_only: bool,
    max_size: int,
    pool: Sequence[Point],
    start_size: int = 1,
) -> Optional[SolveResult]:
    """Smallest verified blocking subset of the candidate pool, sizes ascending.

    The search works on the exact per-edge ray-coverage model (equivalent to
    the witness-interval semantics), so joint kills by opposite-side pairs are
    found; the winner is re-verified with blocks().  When the found size
    equals a sound certificate bound, the result is provably minimal
    (sandwiched); the pool itself carries no optimality claim.
    """
    if len(ps) > 6:
        raise ValueError("exhaustive search is desk-scale only (|P| <= 6)")
    hull = convex_hull(ps.points) if exterior_only else None
    legal_pool = [p for p in pool if _legal(ps, (), p, exterior_only, hull)]
    legal_pool = sorted(set(legal_pool), key=lambda p: (p.x, p.y))
    base_edges = sorted(delaunay_edges(ps))
    intervals = [witness_interval(ps, *e) for e in base_edges]
    rays = [
        [
            _exclusion_ray((ps.points[e[0]], ps.points[e[1]]), p)
            for e in base_edges
        ]
        for p in legal_pool
    ]
    # Points with identical ray vectors are interchangeable: keep the first.
    seen_sig: dict[tuple, int] = {}
    keep: list[int] = []
    for i, vec in enumerate(rays):
        sig = tuple(vec)
        if sig not in seen_sig:
            seen_sig[sig] = i
            keep.append(i)
    legal_pool = [legal_pool[i] for i in keep]
    rays = [rays[i] for i in keep]
    n_pool = len(legal_pool)

    def covered(combo) -> bool:
        return all(
            _rays_cover(itv, [rays[i][e] for i in combo])
            for e, itv in enumerate(intervals)
        )

    if not covered(range(n_pool)):
        return None  # even the whole pool cannot block

    def search(size: int) -> Optional[tuple[int, ...]]:
        # DFS over index-ordered subsets with an optimistic-coverage prune:
        # a prefix dies once even prefix + all remaining points cannot cover.
        best: Optional[tuple[int, ...]] = None

        def rec(start: int, chosen: tuple[int, ...]) -> None:
            nonlocal best
            if best is not None:
                return
            if len(chosen) == size:
                if covered(chosen):
                    best = chosen
                return
            if n_pool - start < size - len(chosen):
                return
            if not covered(chosen + tuple(range(start, n_pool))):
                return
            for i in range(start, n_pool):
                rec(i + 1, chosen + (i,))
                if best is not None:
                    return

        rec(0, ())
        return best

    for size in range(start_size, max_size + 1):
        combo = search(size)
        if combo is None:
            continue
        q = PointSet(tuple(legal_pool[i] for i in combo))
        verdict = blocks(BlockingInstance(ps, q, exterior_only))
        if verdict.blocked:
            return SolveResult(q, True, size, (), 0)
    return None


def default_pool(ps: PointSet, exterior_only: bool, density: int = 3) -> list[Point]:
    """Candidate positions for the exhaustive search: chord interior points,
    extremal-circle pulls, and hull-edge sections, all exactly legality-checked."""
    hull = convex_hull(ps.points) if exterior_only else None
    combined = PointSet(ps.points)
    pool: list[Point] = []
    for e in sorted(delaunay_edges(ps)):
        pool.extend(_edge_candidates(combined, *e, hull=hull, density=density))
    uniq = sorted(set(pool), key=lambda p: (p.x, p.y))
    return [p for p in uniq if _legal(ps, (), p, exterior_only, hull)]
