"""Symbolic certification that the perturbed sets reach general position.

Collinearity of a perturbed triple is the sign of a degree <= 1 polynomial in
tau, cocircularity of a quadruple a degree <= 3 polynomial:

    I(tau) = A + tau B,
    J(tau) = A + tau B + tau^2 C + tau^3 D,

where each point moves as (x, y) -> (x, y + tau sigma x^3) with sigma = +1 on
bottom points and -1 on top points.  For uniform sigma the leading
coefficients are generalized Vandermonde determinants with closed-form
factorizations (node differences times a positive symmetric polynomial),
which is why they cannot vanish on distinct positive abscissae: every
degeneracy polynomial has finitely many roots, and a rational bound strictly
below the smallest positive root certifies general position on (0, bound].

The bound is produced by exact root isolation on rationals (Sturm chains,
sign-variation counts, reciprocal-Cauchy seeds, bisection); no floating point
enters any decision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .constructions import (
    EmptinessViolated,
    Gadget,
    InvalidK,
    build_c0_prime,
    build_p0,
    perturb,
)
from .geometry import Point, convex_hull, in_convex_position, rat

Poly = list[Fraction]  # dense, coeffs[i] multiplies tau^i


class IdenticallyZero(Exception):
    """A degeneracy polynomial vanished identically: the construction is broken."""

    def __init__(self, witness):
        super().__init__(f"identically zero degeneracy polynomial for {witness}")
        self.witness = witness


class BudgetExhausted(Exception):
    """The halving search ran out of attempts; carries the first failing audit."""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


@dataclass(frozen=True)
class TauPolynomial:
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]  # (A, B, C, D)
    kind: str  # "collinearity" | "cocircularity"
    witness: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "collinearity" and (self.coeffs[2] != 0 or self.coeffs[3] != 0):
            raise ValueError("collinearity polynomials have degree <= 1")

    def evaluate(self, tau: Fraction) -> Fraction:
        a, b, c, d = self.coeffs
        return a + tau * (b + tau * (c + tau * d))

    @property
    def dense(self) -> Poly:
        return list(self.coeffs)


@dataclass(frozen=True)
class EpsilonCertificate:
    k: int
    tau_star: Fraction
    positive_root_bound: Fraction
    audited_conditions: tuple[str, ...]
    halvings: int


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det4(m) -> Fraction:
    total = Fraction(0)
    for col in range(4):
        minor = [[m[row][c] for c in range(4) if c != col] for row in range(1, 4)]
        term = m[0][col] * _det3(minor)
        total += term if col % 2 == 0 else -term
    return total


def collinearity_poly(
    p: Point, q: Point, r: Point, sigma: tuple[int, int, int], witness=( )
) -> TauPolynomial:
    """I(tau) = A + tau B for the moving triple."""
    a = _det3([[1, 1, 1], [p.x, q.x, r.x], [p.y, q.y, r.y]])
    b = _det3(
        [
            [1, 1, 1],
            [p.x, q.x, r.x],
            [sigma[0] * p.x**3, sigma[1] * q.x**3, sigma[2] * r.x**3],
        ]
    )
    return TauPolynomial((a, b, Fraction(0), Fraction(0)), "collinearity", tuple(witness))


def _cocircularity_at(pts: Sequence[Point], sigma: Sequence[int], tau: Fraction) -> Fraction:
    row_y = [pts[i].y + tau * sigma[i] * pts[i].x ** 3 for i in range(4)]
    return _det4(
        [
            [1, 1, 1, 1],
            [pts[i].x for i in range(4)],
            row_y,
            [pts[i].x ** 2 + row_y[i] ** 2 for i in range(4)],
        ]
    )


def cocircularity_poly(
    p: Point, q: Point, r: Point, s: Point, sigma: tuple[int, int, int, int], witness=( )
) -> TauPolynomial:
    """J(tau) = A + tau B + tau^2 C + tau^3 D, coefficients recovered exactly
    by interpolation at tau = 0, 1, -1, 2."""
    pts = (p, q, r, s)
    j0 = _cocircularity_at(pts, sigma, Fraction(0))
    j1 = _cocircularity_at(pts, sigma, Fraction(1))
    jm1 = _cocircularity_at(pts, sigma, Fraction(-1))
    j2 = _cocircularity_at(pts, sigma, Fraction(2))
    a = j0
    c = (j1 + jm1) / 2 - a
    odd = (j1 - jm1) / 2  # B + D
    d = ((j2 - a - 4 * c) / 2 - odd) / 3
    b = odd - d
    return TauPolynomial((a, b, c, d), "cocircularity", tuple(witness))


def vandermonde_b(px: Fraction, qx: Fraction, rx: Fraction) -> Fraction:
    """Closed form of det[[1,1,1],[x],[x^3]]: node differences times the sum."""
    return (qx - px) * (rx - px) * (rx - qx) * (px + qx + rx)


def _complete_homogeneous(xs: Sequence[Fraction], degree: int) -> Fraction:
    """h_degree(xs): sum of all monomials of the given total degree."""
    # DP over variables: h[d] after processing a prefix of xs.
    h = [Fraction(0)] * (degree + 1)
    h[0] = Fraction(1)
    for x in xs:
        for d in range(1, degree + 1):
            h[d] += x * h[d - 1]
    return h[degree]


def vandermonde_d(px: Fraction, qx: Fraction, rx: Fraction, sx: Fraction) -> Fraction:
    """Closed form of det[[1,1,1,1],[x],[x^3],[x^6]].

    Exponents (0,1,3,6) give the full Vandermonde product times the Schur
    polynomial of shape (3,1), which by Jacobi-Trudi is h1*h3 - h4 -- a
    positive combination of monomials, hence nonzero on distinct positive
    nodes.
    """
    xs = (px, qx, rx, sx)
    vandermonde = Fraction(1)
    for i in range(4):
        for j in range(i + 1, 4):
            vandermonde *= xs[j] - xs[i]
    schur = _complete_homogeneous(xs, 1) * _complete_homogeneous(xs, 3) - _complete_homogeneous(xs, 4)
    return vandermonde * schur


# ---------------------------------------------------------------------------
# exact root machinery for degree <= 3 rational polynomials


def _trim(p: Poly) -> Poly:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def _eval_poly(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _derivative(p: Poly) -> Poly:
    return [i * c for i, c in enumerate(p)][1:]


def _poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact dense rational polynomial division with remainder."""
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        coef = r[-1] / lb
        shift = len(r) - 1 - db
        q[shift] = coef
        for i in range(db + 1):
            r[shift + i] -= coef * b[i]
        r = _trim(r)
    return _trim(q), r


def _poly_rem(a: Poly, b: Poly) -> Poly:
    return _poly_divmod(a, b)[1]


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [_trim(p)]
    d = _trim(_derivative(p))
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        rem = _trim([-c for c in rem])
        if not rem:
            break
        chain.append(rem)
    return chain


def _sign_changes(values: Iterable[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_count(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    va = _sign_changes(_eval_poly(p, a) for p in chain)
    vb = _sign_changes(_eval_poly(p, b) for p in chain)
    return va - vb


def _squarefree(p: Poly) -> Poly:
    """p / gcd(p, p') -- same roots, all simple."""
    d = _trim(_derivative(p))
    if not d:
        return _trim(p)
    a, b = _trim(p), d
    while b:
        a, b = b, _poly_rem(a, b)
    g = a
    if len(g) <= 1:
        return _trim(p)
    return _poly_divmod(_trim(p), g)[0]


def _descartes_positive(p: Poly) -> int:
    """Upper bound (Descartes) on the number of positive roots."""
    return _sign_changes(c for c in p if c != 0)


def positive_root_lower_bound(p: Poly) -> Optional[Fraction]:
    """A rational strictly below every positive real root of p, or None when
    p has no positive roots.  p must not be identically zero after trimming
    the root at 0."""
    q = _trim(p)
    if not q:
        return None
    while q and q[0] == 0:
        q = q[1:]  # factor out tau
    if len(q) <= 1 or _descartes_positive(q) == 0:
        return None
    # Reciprocal Cauchy seed: every root rho of q has
    # |rho| >= |a0| / (|a0| + max_{i>=1} |a_i|).
    a0 = abs(q[0])
    amax = max(abs(c) for c in q[1:])
    seed = a0 / (a0 + amax)
    # Refine downward with an exact Sturm count until (0, bound] is root-free.
    chain = _sturm_chain(_squarefree(q))
    bound = seed
    for _ in range(512):
        if _eval_poly(q, bound) != 0 and _sturm_count(chain, Fraction(0), bound) == 0:
            return bound
        bound /= 2
    raise ArithmeticError("root bound refinement failed to converge")


def positive_root_bound(polys: Iterable[TauPolynomial]) -> Fraction:
    """A rational b > 0 strictly below every positive root of every polynomial.

    Polynomials that are identically zero contradict the construction and
    raise IdenticallyZero.  When no polynomial has a positive root the bound
    defaults to 1.
    """
    best: Optional[Fraction] = None
    for tp in polys:
        dense = _trim(tp.dense)
        if not dense:
            raise IdenticallyZero(tp.witness)
        b = positive_root_lower_bound(dense)
        if b is not None and (best is None or b < best):
            best = b
    return best if best is not None else Fraction(1)


# ---------------------------------------------------------------------------
# certificate search


def _sigma_of_index(i: int) -> int:
    """Points are laid out per gadget as (ell, m, r, t): index 3 mod 4 is a top."""
    return -1 if i % 4 == 3 else 1


def all_tau_polynomials(k: int) -> Iterator[TauPolynomial]:
    """Every collinearity triple and cocircularity quadruple of the 4k points."""
    ps, _ = build_p0(k)
    pts = ps.points
    n = len(pts)
    sig = [_sigma_of_index(i) for i in range(n)]
    for i, j, l in itertools.combinations(range(n), 3):
        yield collinearity_poly(pts[i], pts[j], pts[l], (sig[i], sig[j], sig[l]), (i, j, l))
    for i, j, l, m in itertools.combinations(range(n), 4):
        yield cocircularity_poly(
            pts[i], pts[j], pts[l], pts[m], (sig[i], sig[j], sig[l], sig[m]), (i, j, l, m)
        )


def _lower_intersection_inside(circle_a, circle_b, hull) -> bool:
    from .lower_bounds import lower_intersection_point, radical_point_hull_sign

    lower = lower_intersection_point(circle_a, circle_b)
    if lower is None:
        return False
    return radical_point_hull_sign(lower, hull) < 0


def _audit_tau(k: int, base: Sequence[Gadget], tau: Fraction, bound: Fraction) -> Optional[str]:
    """Run all exact audits at tau; return the first failing audit id, or None."""
    from .lower_bounds import cross_group_overlaps

    if not (0 < tau < bound):
        return "tau-below-root-bound"
    ps = perturb(base, tau)
    if not in_convex_position(ps.points.points):
        return "convex-position"
    try:
        family = build_c0_prime(base, tau)
    except EmptinessViolated as exc:
        return f"circle-emptiness:{exc.role}^{exc.gadget}"
    hull = convex_hull(ps.points.points)
    for pos in range(1, k - 1):
        i = base[pos].index
        f1 = family.find("F1", i).circle
        f3 = family.find("F3", i).circle
        if not _lower_intersection_inside(f1, f3, hull):
            return f"lower-intersection-F1F3:{i}"
        g1 = family.find("G1", i).circle
        g3 = family.find("G3", i).circle
        if not _lower_intersection_inside(g1, g3, hull):
            return f"lower-intersection-G1G3:{i}"
    offenders = cross_group_overlaps(hull, family)
    if offenders:
        a, b = offenders[0]
        return f"cross-group-overlap:{a}~{b}"
    return None


AUDIT_IDS = (
    "tau-below-root-bound",
    "convex-position",
    "circle-emptiness",
    "lower-intersection-F1F3",
    "lower-intersection-G1G3",
    "cross-group-disjointness",
)


def certify_epsilon(k: int, max_halvings: int = 60) -> EpsilonCertificate:
    """Choose an explicit rational tau* with every audit green.

    Halving search: the existence proof is nonconstructive, but each audit is
    an exact semi-algebraic check that is easy to run at a point, so geometric
    halving from min(2^-(2k+4), bound/2) terminates quickly in practice.
    """
    if k < 2:
        raise InvalidK("certification needs k >= 2")
    bound = positive_root_bound(all_tau_polynomials(k))
    _, base = build_p0(k)
    tau = min(Fraction(1, 2 ** (2 * k + 4)), bound / 2)
    first_failure = None
    for step in range(max_halvings):
        failure = _audit_tau(k, base, tau, bound)
        if failure is None:
            return EpsilonCertificate(k, tau, bound, AUDIT_IDS, step)
        if first_failure is None:
            first_failure = f"tau={tau}: {failure}"
        tau /= 2
    raise BudgetExhausted(f"no tau found in {max_halvings} halvings; first failure: {first_failure}")
