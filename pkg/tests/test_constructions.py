from fractions import Fraction

import pytest

from blockade.constructions import (
    EmptinessViolated,
    InvalidK,
    build_alt_3k,
    build_c0,
    build_c0_prime,
    build_p0,
    general_construction,
    perturb,
    regular_ngon,
)
from blockade.geometry import (
    circle_through_tangent_at,
    convex_hull,
    in_circle_sign,
    in_convex_position,
    orient,
)

from conftest import P


def test_build_p0_k1_coordinates():
    ps, gadgets = build_p0(1)
    assert ps.points == (P(9, 0), P(10, 0), P(11, 0), P(10, Fraction(3, 2)))
    assert ps.labels == ("ell_1", "m_1", "r_1", "t_1")
    assert gadgets[0].ell == P(9, 0)


def test_build_p0_k2_gadget2():
    _, gadgets = build_p0(2)
    g = gadgets[1]
    assert (g.ell, g.m, g.r, g.t) == (
        P(13, 0),
        P(Fraction(27, 2), 0),
        P(14, 0),
        P(Fraction(27, 2), Fraction(3, 4)),
    )


def test_top_points_on_line():
    ps, gadgets = build_p0(5)
    for g in gadgets:
        assert 3 * g.t.x + 14 * g.t.y == 51
    # All bottom points on the axis, increasing x, positive coordinates.
    bottoms = [p for i, p in enumerate(ps.points) if i % 4 != 3]
    assert all(p.y == 0 and p.x > 0 for p in bottoms)
    xs = [p.x for p in bottoms]
    assert xs == sorted(xs) and len(set(xs)) == len(xs)


def test_invalid_k():
    with pytest.raises(InvalidK):
        build_p0(0)
    with pytest.raises(InvalidK):
        build_alt_3k(-1)


def test_build_c0_counts_and_k1_circles():
    _, g1 = build_p0(1)
    fam = build_c0(g1)
    assert len(fam) == 4
    f1 = fam.find("F1", 1).circle
    assert f1.center == P(9, Fraction(13, 12)) and f1.radius_sq == Fraction(169, 144)
    g1c = fam.find("G1", 1).circle
    assert g1c.center == P(11, Fraction(13, 12))
    f2 = fam.find("F2", 1).circle
    assert f2.center == P(Fraction(19, 2), 0) and f2.radius_sq == Fraction(1, 4)
    g2 = fam.find("G2", 1).circle
    assert g2.center == P(Fraction(21, 2), 0) and g2.radius_sq == Fraction(1, 4)


def test_build_c0_k2_h_circle():
    _, gs = build_p0(2)
    fam = build_c0(gs)
    assert len(fam) == 5 * 2 - 1
    h = fam.find("H", 1).circle
    assert h.center == P(12, 0) and h.radius_sq == 1


def test_bottom_circle_tangency_chain():
    _, gs = build_p0(3)
    fam = build_c0(gs)
    # Neighboring bottom circles are tangent: center distance equals radius sum.
    chain = []
    for pos, g in enumerate(gs):
        chain.append(fam.find("F2", g.index))
        chain.append(fam.find("G2", g.index))
        if pos < 2:
            chain.append(fam.find("H", g.index))
    for a, b in zip(chain, chain[1:]):
        ca, cb = a.circle, b.circle
        d2 = (ca.center.x - cb.center.x) ** 2 + (ca.center.y - cb.center.y) ** 2
        # (ra + rb)^2 = ra^2 + rb^2 + 2 ra rb; all radii here are rational.
        import math

        ra = Fraction(math.isqrt(ca.radius_sq.numerator), math.isqrt(ca.radius_sq.denominator))
        rb = Fraction(math.isqrt(cb.radius_sq.numerator), math.isqrt(cb.radius_sq.denominator))
        assert ra * ra == ca.radius_sq and rb * rb == cb.radius_sq
        assert d2 == (ra + rb) ** 2


def test_family_emptiness_invariant():
    for k in (1, 2, 4, 6):
        ps, gs = build_p0(k)
        fam = build_c0(gs)
        for tc in fam.circles:
            signs = [in_circle_sign(tc.circle, p) for p in ps.points]
            assert signs.count(0) == 2
            assert all(s >= 0 for s in signs)


def test_perturb_examples():
    _, gs = build_p0(1)
    out = perturb(gs, Fraction(1, 1000))
    g = out.gadgets[0]
    assert g.ell == P(9, Fraction(729, 1000))
    assert g.t == P(10, Fraction(1, 2))
    ident = perturb(gs, 0)
    assert ident.points.points == tuple(p for g in gs for p in (g.ell, g.m, g.r, g.t))


def test_c0_prime_k3_roles():
    _, gs = build_p0(3)
    fam = build_c0_prime(gs, 0)
    assert len(fam) == 7 * 3 - 9
    roles = {(tc.role, tc.gadget) for tc in fam.circles}
    assert roles == {
        ("F2", 1), ("G2", 1), ("H", 1),
        ("F1", 2), ("G1", 2), ("F2", 2), ("G2", 2), ("F3", 2), ("G3", 2), ("H", 2),
        ("F2", 3), ("G2", 3),
    }


def test_c0_prime_needs_k_at_least_2():
    _, gs = build_p0(1)
    with pytest.raises(InvalidK):
        build_c0_prime(gs, 0)


def test_f3_matches_direct_construction():
    _, gs = build_p0(3)
    fam = build_c0_prime(gs, 0)
    g2, g3 = gs[1], gs[2]
    expect = circle_through_tangent_at(g2.t, g2.m, (g3.t.x - g2.t.x, g3.t.y - g2.t.y))
    f3 = fam.find("F3", 2).circle
    assert f3 == expect
    assert in_circle_sign(f3, g2.t) == 0 and in_circle_sign(f3, g2.m) == 0
    # Tangent to the top line: at tau=0 the direction is (14, -3).
    d = (Fraction(14), Fraction(-3))
    assert d[0] * (f3.center.x - g2.t.x) + d[1] * (f3.center.y - g2.t.y) == 0


def test_g3_excludes_neighbors():
    _, gs = build_p0(3)
    fam = build_c0_prime(gs, 0)
    g = gs[1]
    g3 = fam.find("G3", 2).circle
    assert in_circle_sign(g3, g.t) == 0 and in_circle_sign(g3, g.m) == 0
    assert in_circle_sign(g3, g.ell) == 1
    assert in_circle_sign(g3, g.r) == 1


def test_c0_prime_rejects_huge_tau():
    # k=2 has only diameter circles, which stay empty even at tau=1 (there the
    # convex-position audit is what fails); k=3 has an F3 that captures r_2.
    _, gs = build_p0(3)
    with pytest.raises(EmptinessViolated):
        build_c0_prime(gs, 1)
    assert not in_convex_position(perturb(build_p0(2)[1], 1).points.points)


def test_perturbed_bottom_chain_strictly_convex():
    from blockade.perturbation import certify_epsilon

    cert = certify_epsilon(2)
    out = perturb(build_p0(2)[1], cert.tau_star)
    bottoms = [p for i, p in enumerate(out.points.points) if i % 4 != 3]
    bottoms.sort(key=lambda p: p.x)
    for a, b, c in zip(bottoms, bottoms[1:], bottoms[2:]):
        assert orient(a, b, c) == 1
    tops = [p for i, p in enumerate(out.points.points) if i % 4 == 3]
    tops.sort(key=lambda p: p.x)
    for a, b, c in zip(tops, tops[1:], tops[2:]):
        assert orient(a, b, c) == -1
    assert in_convex_position(out.points.points)


def test_build_alt_3k():
    ps, fam = build_alt_3k(1)
    assert ps.points == (P(9, 0), P(11, 0), P(10, Fraction(3, 2)))
    assert len(fam) == 3
    i2 = fam.find("I2", 1).circle
    assert i2.center == P(10, 0) and i2.radius_sq == 1
    ps2, fam2 = build_alt_3k(2)
    assert len(ps2) == 6 and len(fam2) == 7


def test_alt_3k_emptiness_up_to_8():
    for k in range(1, 9):
        ps, fam = build_alt_3k(k)
        for tc in fam.circles:
            signs = [in_circle_sign(tc.circle, p) for p in ps.points]
            assert signs.count(0) == 2 and all(s >= 0 for s in signs)


def test_regular_ngon_convex():
    for n in (3, 5, 8, 12):
        ps = regular_ngon(n)
        assert len(ps) == n
        assert in_convex_position(ps.points)
