import random
from fractions import Fraction

import pytest

from blockade.delaunay import (
    BlockingInstance,
    IdenticalPoints,
    PointSet,
    blocks,
    delaunay_edges,
    is_blocked_edge,
    is_general_position,
    witness_interval,
)
from blockade.geometry import Point

from conftest import P, pset, oracle_delaunay_edges


def test_pointset_rejects_duplicates():
    with pytest.raises(IdenticalPoints):
        pset([(0, 0), (0, 0)])


def test_two_points_always_adjacent():
    w = witness_interval(pset([(0, 0), (1, 0)]), 0, 1)
    assert w.nonempty and w.lo is None and w.hi is None


def test_collinear_chord_kills_edge():
    w = witness_interval(pset([(9, 0), (10, 0), (11, 0)]), 0, 2)
    assert w.empty


def test_straddling_pair_covers_bisector():
    S = pset([(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 10)), (Fraction(1, 2), Fraction(-1, 10))])
    assert witness_interval(S, 0, 1).empty
    # One constraint alone leaves the ray c <= -6/5 open.
    S1 = pset([(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 10))])
    w = witness_interval(S1, 0, 1)
    assert w.nonempty and w.lo is None and w.hi == Fraction(-6, 5)


def test_gadget_edges():
    S = pset([(9, 0), (10, 0), (11, 0), (10, Fraction(3, 2))])
    assert delaunay_edges(S) == {(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)}


def test_cocircular_square_keeps_both_diagonals():
    S = pset([(0, 0), (1, 0), (1, 1), (0, 1)])
    edges = delaunay_edges(S)
    assert edges == {(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)}


def test_convex_pentagon_edge_count():
    S = pset([(0, 0), (4, -1), (6, 2), (3, 5), (-1, 3)])
    assert len(delaunay_edges(S)) == 2 * 5 - 3


def test_witness_symmetry_up_to_orientation():
    S = pset([(0, 0), (3, 1), (1, 2), (2, -1), (4, 3)])
    for i in range(5):
        for j in range(i + 1, 5):
            a = witness_interval(S, i, j)
            b = witness_interval(S, j, i)
            assert a.empty == b.empty
            if not a.empty:
                # Reversing the edge negates the parameterization.
                assert (a.lo is None) == (b.hi is None)
                assert (a.hi is None) == (b.lo is None)
                if a.lo is not None:
                    assert a.lo == -b.hi
                if a.hi is not None:
                    assert a.hi == -b.lo


def _random_point_set(rng, n, degenerate=False):
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(0, 24), rng.randint(0, 24)))
    pts = list(pts)
    if degenerate and n >= 4:
        # Force a collinear triple and a cocircular quadruple (axis-aligned square).
        x0, y0 = pts[0]
        pts[1] = (x0 + 1, y0)
        pts[2] = (x0 + 2, y0)
        s = 3
        pts[3] = (x0, y0 + s)
        if n >= 6:
            pts[4] = (x0 + s, y0)
            pts[5] = (x0 + s, y0 + s)
    if len(set(pts)) < n:
        return None
    return pset(pts)


def test_oracle_equivalence_sample():
    rng = random.Random(0)
    done = 0
    while done < 60:
        n = rng.randint(3, 12)
        S = _random_point_set(rng, n, degenerate=(done % 3 == 0))
        if S is None:
            continue
        assert delaunay_edges(S) == oracle_delaunay_edges(S), S
        done += 1


def test_monotonicity_under_insertion():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(3, 9)
        S = _random_point_set(rng, n + 1)
        if S is None:
            continue
        base = PointSet(S.points[:-1])
        before = delaunay_edges(base)
        after = delaunay_edges(S)
        restricted = {e for e in after if e[0] < n and e[1] < n}
        assert restricted <= before


def test_is_blocked_edge_examples():
    Pset = pset([(0, 0), (1, 0)])
    Q2 = pset([(Fraction(1, 2), Fraction(1, 10)), (Fraction(1, 2), Fraction(-1, 10))])
    Q1 = pset([(Fraction(1, 2), Fraction(1, 10))])
    assert is_blocked_edge(BlockingInstance(Pset, Q2), 0, 1)
    assert not is_blocked_edge(BlockingInstance(Pset, Q1), 0, 1)


def test_blocks_requires_nonempty_q_on_delaunay_edge():
    S = pset([(0, 0), (4, -1), (6, 2), (3, 5), (-1, 3)])
    v = blocks(BlockingInstance(S, PointSet(()), False))
    assert v.status == "unblocked" and len(v.unblocked_edges) == 7


def test_blocks_two_point_instance():
    Pset = pset([(0, 0), (1, 0)])
    Q = pset([(Fraction(1, 2), Fraction(1, 10)), (Fraction(1, 2), Fraction(-1, 10))])
    assert blocks(BlockingInstance(Pset, Q)).blocked


def test_blocks_exterior_violation():
    Pset = pset([(0, 0), (4, 0), (2, 4)])
    Q = pset([(2, 1)])
    v = blocks(BlockingInstance(Pset, Q, exterior_only=True))
    assert v.status == "exterior_violation" and v.violating_points == (0,)


def test_blocker_on_hull_boundary_is_legal():
    # Boundary placement is permitted: the point sits on the hull edge.
    Pset = pset([(0, 0), (4, 0), (2, 4)])
    Q = pset([(2, 0)])
    v = blocks(BlockingInstance(Pset, Q, exterior_only=True))
    assert v.status != "exterior_violation"


def test_single_blocker_cannot_block_gadget():
    from blockade.constructions import build_p0

    ps, _ = build_p0(1)
    q = pset([(Fraction(19, 2), Fraction(-1, 100))])
    v = blocks(BlockingInstance(ps, q, exterior_only=True))
    assert v.status == "unblocked"


def test_pentagon_exterior_midpoints_block():
    # Snapped regular pentagon with blockers just past each edge midpoint.
    from blockade.constructions import regular_ngon
    from blockade.geometry import convex_hull

    ps = regular_ngon(5)
    hull = convex_hull(ps.points)
    qs = []
    for a, b in hull.edges():
        mx, my = (a.x + b.x) / 2, (a.y + b.y) / 2
        qs.append(Point(mx * Fraction(1001, 1000), my * Fraction(1001, 1000)))
    v = blocks(BlockingInstance(ps, PointSet(tuple(qs)), exterior_only=True))
    assert v.blocked


def test_degenerate_sets_can_be_blocked_below_biniaz_size():
    # 3 collinear points are blocked by 2 on-chord points: the general-position
    # necessity bound does not extend to degenerate configurations.
    Pset = pset([(0, 0), (1, 0), (2, 0)])
    Q = pset([(Fraction(1, 2), 0), (Fraction(3, 2), 0)])
    inst = BlockingInstance(Pset, Q, exterior_only=True)
    assert blocks(inst).blocked
    assert len(Q) < len(Pset)
    assert not is_general_position(PointSet(Pset.points + Q.points))


def test_witness_interval_semantics_direct():
    """Sampled parameters inside the interval give circles with empty open
    interiors; parameters strictly outside give circles containing a point."""
    from blockade.geometry import Circle, in_circle_sign, norm_sq, rot90, sub

    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(3, 8)
        coords = set()
        while len(coords) < n:
            coords.add((rng.randint(0, 12), rng.randint(0, 12)))
        S = pset(sorted(coords))
        i, j = rng.sample(range(n), 2)
        itv = witness_interval(S, i, j)
        p, q = S.points[i], S.points[j]
        m = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        nv = rot90(sub(q, p))

        def circle_at(c):
            center = Point(m.x + c * nv[0], m.y + c * nv[1])
            return Circle(center, c * c * norm_sq(nv) + norm_sq(sub(p, m)))

        def empty_at(c):
            w = circle_at(c)
            return all(
                in_circle_sign(w, s) >= 0
                for k, s in enumerate(S.points)
                if k not in (i, j)
            )

        if itv.empty:
            for c in (Fraction(-5), Fraction(0), Fraction(5), Fraction(1, 3)):
                assert not empty_at(c)
        else:
            samples = []
            if itv.lo is not None:
                samples.append(itv.lo)
                assert not empty_at(itv.lo - 1)  # strictly outside
            if itv.hi is not None:
                samples.append(itv.hi)
                assert not empty_at(itv.hi + 1)
            if itv.lo is not None and itv.hi is not None:
                samples.append((itv.lo + itv.hi) / 2)
            if not samples:
                samples = [Fraction(0), Fraction(-7), Fraction(7)]
            for c in samples:
                assert empty_at(c), (S.points, (i, j), c)


def test_blocks_monotone_in_q():
    # Adding points to a blocking Q never yields unblocked.
    Pset = pset([(0, 0), (1, 0)])
    Q = [P(Fraction(1, 2), Fraction(1, 10)), P(Fraction(1, 2), Fraction(-1, 10))]
    assert blocks(BlockingInstance(Pset, PointSet(tuple(Q)))).blocked
    extras = [P(5, 5), P(-3, 2), P(Fraction(1, 4), Fraction(1, 3))]
    for i in range(len(extras)):
        bigger = PointSet(tuple(Q + extras[: i + 1]))
        assert blocks(BlockingInstance(Pset, bigger)).blocked


def test_is_general_position():
    assert is_general_position(pset([(0, 0), (1, 0), (0, 1), (5, 7)]))
    assert not is_general_position(pset([(0, 0), (1, 0), (2, 0)]))
    assert not is_general_position(pset([(0, 0), (1, 0), (1, 1), (0, 1)]))
