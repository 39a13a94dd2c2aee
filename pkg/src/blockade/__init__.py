"""blockade: exact-arithmetic toolkit for Delaunay blocking sets."""

from .geometry import (
    Circle,
    DegenerateCircle,
    GeometryError,
    Hull,
    NoSolution,
    Point,
    compare_sqrt_expr,
    convex_hull,
    circle_from_diameter,
    circle_through_tangent_at,
    in_circle_sign,
    orient,
    pt,
    rat,
    rat_str,
    strictly_outside,
)
from .delaunay import (
    BlockingInstance,
    IdenticalPoints,
    PointSet,
    Verdict,
    WitnessInterval,
    blocks,
    delaunay_edges,
    is_blocked_edge,
    point_set,
    witness_interval,
)

__version__ = "0.1.0"
