"""Shared helpers: an independent brute-force Delaunay oracle and point builders.

The oracle deliberately avoids the witness-interval machinery: an edge is a
Delaunay-graph edge iff it belongs to a triangle whose circumcircle's open
interior is empty (with the textbook incircle determinant), falling back to
consecutive-pair logic for fully collinear inputs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from blockade.delaunay import PointSet
from blockade.geometry import Point, orient


def P(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


def pset(coords, labels=None) -> PointSet:
    return PointSet(tuple(P(x, y) for x, y in coords), tuple(labels) if labels else None)


def incircle_det(a: Point, b: Point, c: Point, d: Point) -> Fraction:
    """Positive iff d is strictly inside the circumcircle of ccw triangle abc."""
    adx, ady = a.x - d.x, a.y - d.y
    bdx, bdy = b.x - d.x, b.y - d.y
    cdx, cdy = c.x - d.x, c.y - d.y
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (
        alift * (bdx * cdy - cdx * bdy)
        - blift * (adx * cdy - cdx * ady)
        + clift * (adx * bdy - bdx * ady)
    )


def oracle_delaunay_edges(ps: PointSet) -> set[tuple[int, int]]:
    """Union of edges over all empty-circumcircle triangles."""
    pts = ps.points
    n = len(pts)
    if n == 2:
        return {(0, 1)}
    if all(orient(pts[0], pts[1], pts[k]) == 0 for k in range(2, n)):
        # Fully collinear: consecutive pairs along the line are the graph.
        order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].y))
        return {tuple(sorted((order[i], order[i + 1]))) for i in range(n - 1)}
    edges: set[tuple[int, int]] = set()
    for i, j, k in itertools.combinations(range(n), 3):
        o = orient(pts[i], pts[j], pts[k])
        if o == 0:
            continue
        a, b, c = (i, j, k) if o > 0 else (i, k, j)
        if any(
            incircle_det(pts[a], pts[b], pts[c], pts[d]) > 0
            for d in range(n)
            if d not in (i, j, k)
        ):
            continue
        edges.update({tuple(sorted((i, j))), tuple(sorted((i, k))), tuple(sorted((j, k)))})
    return edges
