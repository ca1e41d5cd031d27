"""Smale alpha theory: constants, regularity, distinctness and realness tests.

The gamma constant is never computed directly; it is replaced by the
Bombieri-Weyl bound ``mu * d^(3/2) / (2 ||(1,x)||)`` where
``mu = max(1, ||F|| ||F'(x)^-1 Delta_F(x)||)`` and the operator norm is bounded
by the Frobenius norm.

In exact mode every quantity is carried as an exact square (all of beta^2,
mu^2 and gamma^2 are rational over Q(i)) and square roots are taken only at
the end through :func:`rational_sqrt_upper`, which yields sound rational upper
bounds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from .poly.linalg import is_numerically_singular, solve_exact
from .poly.scalar import Mode, abs2
from .poly.system import (Point, PolySystem, delta_matrix, delta_sq_diagonal, distance_sq,
                          evaluate_with_jacobian, projective_point_norm,
                          projective_point_norm_sq, system_norm, system_norm_sq)

#: (13 - 3 sqrt(17)) / 4, the approximate-solution threshold for alpha.
ALPHA_REGULAR = (13 - 3 * math.sqrt(17)) / 4
#: alpha bound under which the 1/(20 gamma) ball is a shared basin.
ALPHA_SAME = 0.03
ALPHA_SAME_EXACT = Fraction(3, 100)


class NonRealSystemError(ValueError):
    """Realness certification needs a system with real coefficients."""


class Distinctness(str, enum.Enum):
    DISTINCT = "Distinct"
    SAME = "Same"
    UNDECIDED = "Undecided"


class Realness(str, enum.Enum):
    REAL = "Real"
    NOT_REAL = "NotReal"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class ExactBoundContext:
    """Tightness of the rational enclosures of square roots in exact mode."""

    sqrt_slack: Fraction = Fraction(1, 10**6)

    def __post_init__(self):
        s = Fraction(self.sqrt_slack)
        if s <= 0:
            raise ValueError("sqrt_slack must be positive")
        object.__setattr__(self, "sqrt_slack", s)


def _is_square_int(k: int) -> bool:
    return k >= 0 and math.isqrt(k) ** 2 == k


def _dyadic_upper(q: Fraction, k: int) -> Fraction:
    """Smallest multiple of 2^-k strictly above sqrt(q) (q not a dyadic square)."""
    a = math.isqrt((q.numerator << (2 * k)) // q.denominator)
    return Fraction(a + 1, 1 << k)


def rational_sqrt_upper(q, ctx: ExactBoundContext | None = None) -> Fraction:
    """Rational ``r`` with ``sqrt(q) <= r <= sqrt(q) * (1 + sqrt_slack)``.

    Exact squares of rationals are returned exactly.  Otherwise ``r`` is the
    smallest dyadic ``m / 2^k`` above ``sqrt(q)`` for the least ``k`` meeting
    the slack; this choice makes the bound monotone in the slack.
    """
    ctx = ctx or ExactBoundContext()
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    if q == 0:
        return Fraction(0)
    if _is_square_int(q.numerator) and _is_square_int(q.denominator):
        return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))
    bound = q * (1 + ctx.sqrt_slack) ** 2

    def ok(k):
        return _dyadic_upper(q, k) ** 2 <= bound

    hi = 1
    while not ok(hi):
        hi *= 2
    lo = 0 if ok(0) else hi // 2
    # satisfying k form an up-set; find its least element
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return _dyadic_upper(q, hi)


@dataclass(frozen=True)
class AlphaConstants:
    """Certified alpha-theory data at one point.

    ``gamma_bound`` is an upper bound on gamma, ``alpha = beta * gamma_bound``.
    In exact mode all fields are Fractions (upper bounds) and ``*_sq`` hold the
    exact squares from which they were derived.
    """

    alpha: object
    beta: object
    gamma_bound: object
    mu: object
    singular_jacobian: bool = False
    mode: Mode = Mode.APPROX
    beta_sq: object = None
    gamma_sq: object = None
    mu_sq: object = None

    @classmethod
    def infinite(cls, mode: Mode = Mode.APPROX) -> "AlphaConstants":
        inf = math.inf
        return cls(inf, inf, inf, inf, True, mode, inf, inf, inf)

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma_bound)

    def squared(self):
        """``(alpha^2, beta^2, gamma^2)``; the form the original package prints."""
        if self.singular_jacobian:
            return (math.inf, math.inf, math.inf)
        return (self.beta_sq * self.gamma_sq, self.beta_sq, self.gamma_sq)


def compute_constants(F: PolySystem, x, ctx: ExactBoundContext | None = None) -> AlphaConstants:
    """alpha, beta and the gamma bound of ``F`` at ``x``."""
    x = F.check_point(x)
    if F.mode is Mode.EXACT:
        return _exact_constants(F, x, ctx or ExactBoundContext())
    vals, jac = evaluate_with_jacobian(F, x)
    J = np.array(jac, dtype=complex)
    if is_numerically_singular(J):
        return AlphaConstants.infinite()
    try:
        step = np.linalg.solve(J, np.array(vals, dtype=complex))
        JinvD = np.linalg.solve(J, delta_matrix(F, x).astype(complex))
    except np.linalg.LinAlgError:
        return AlphaConstants.infinite()
    beta = float(np.linalg.norm(step))
    mu = max(1.0, system_norm(F) * float(np.linalg.norm(JinvD, "fro")))
    d = F.max_degree
    gamma = mu * d ** 1.5 / (2.0 * projective_point_norm(x))
    alpha = beta * gamma
    if not all(map(math.isfinite, (alpha, beta, gamma))):
        return AlphaConstants.infinite()
    return AlphaConstants(alpha, beta, gamma, mu, False, Mode.APPROX,
                          beta * beta, gamma * gamma, mu * mu)


def _exact_constants(F: PolySystem, x: Point, ctx: ExactBoundContext) -> AlphaConstants:
    vals, jac = evaluate_with_jacobian(F, x)
    n = F.num_vars
    # one elimination gives both J^-1 F(x) and J^-1 (columns of the identity)
    rhs = [[vals[i]] + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    sol = solve_exact(jac, rhs)
    if sol is None:
        return AlphaConstants.infinite(Mode.EXACT)
    beta_sq = sum((abs2(row[0]) for row in sol), Fraction(0))
    dsq = delta_sq_diagonal(F, x)
    frob_sq = sum((abs2(sol[i][1 + j]) * dsq[j] for i in range(n) for j in range(n)), Fraction(0))
    mu_sq = max(Fraction(1), system_norm_sq(F) * frob_sq)
    d = F.max_degree
    gamma_sq = mu_sq * d ** 3 / (4 * projective_point_norm_sq(x))
    beta = rational_sqrt_upper(beta_sq, ctx)
    gamma = rational_sqrt_upper(gamma_sq, ctx)
    mu = rational_sqrt_upper(mu_sq, ctx)
    return AlphaConstants(beta * gamma, beta, gamma, mu, False, Mode.EXACT,
                          beta_sq, gamma_sq, mu_sq)


def _below_regular_threshold(alpha) -> bool:
    if isinstance(alpha, Fraction):
        # alpha < (13 - 3 sqrt 17)/4  <=>  4 alpha < 13 and (13 - 4 alpha)^2 > 153
        return 4 * alpha < 13 and (13 - 4 * alpha) ** 2 > 153
    return alpha < ALPHA_REGULAR


def _below_same_threshold(alpha) -> bool:
    if isinstance(alpha, Fraction):
        return alpha < ALPHA_SAME_EXACT
    return alpha < ALPHA_SAME


def is_regular(c: AlphaConstants) -> bool:
    return not c.singular_jacobian and _below_regular_threshold(c.alpha)


def certify_regular(F: PolySystem, x, ctx: ExactBoundContext | None = None) -> bool:
    """True iff alpha(F, x) < (13 - 3 sqrt 17)/4."""
    return is_regular(compute_constants(F, x, ctx))


def _within_same_radius(dist_sq, c: AlphaConstants) -> bool:
    """``dist < 1 / (20 gamma)`` evaluated on squares."""
    return dist_sq * 400 * c.gamma_bound * c.gamma_bound < 1


def distinctness_from_constants(x: Point, y: Point, cx: AlphaConstants,
                                cy: AlphaConstants) -> Distinctness:
    """Same / Distinct / Undecided verdict from precomputed constants."""
    if cx.singular_jacobian and cy.singular_jacobian:
        return Distinctness.UNDECIDED
    dsq = distance_sq(x, y)
    for c in (cx, cy):
        if not c.singular_jacobian and _below_same_threshold(c.alpha) and _within_same_radius(dsq, c):
            return Distinctness.SAME
    if is_regular(cx) and is_regular(cy):
        radius = 2 * (cx.beta + cy.beta)
        if dsq > radius * radius:
            return Distinctness.DISTINCT
    return Distinctness.UNDECIDED


def certify_distinct(F: PolySystem, x, y, ctx: ExactBoundContext | None = None) -> Distinctness:
    """Decide whether ``x`` and ``y`` approximate the same root of ``F``."""
    x, y = F.check_point(x), F.check_point(y)
    return distinctness_from_constants(x, y, compute_constants(F, x, ctx),
                                       compute_constants(F, y, ctx))


def check_real_coefficients(F: PolySystem):
    for k, p in enumerate(F.polys):
        if not p.has_real_coefficients():
            raise NonRealSystemError(
                f"polynomial {k} ({p.to_string(F.var_names)}) has non-real coefficients")


def realness_from_constants(x: Point, c: AlphaConstants) -> Realness:
    if c.singular_jacobian:
        return Realness.UNDECIDED
    dsq = distance_sq(x, x.conjugate())
    if _below_same_threshold(c.alpha) and _within_same_radius(dsq, c):
        return Realness.REAL
    # the 4 beta separation only refutes realness of an associated root
    if is_regular(c) and dsq > 16 * c.beta * c.beta:
        return Realness.NOT_REAL
    return Realness.UNDECIDED


def certify_real(F: PolySystem, x, ctx: ExactBoundContext | None = None) -> Realness:
    """Decide whether the root associated with ``x`` is real (F must be real)."""
    check_real_coefficients(F)
    x = F.check_point(x)
    return realness_from_constants(x, compute_constants(F, x, ctx))


@dataclass
class AlphaCertification:
    """Batch outcome; lists hold indices into the input solution list."""

    points: List[Point]
    constants: List[AlphaConstants]
    alpha_values: list
    certified_regular: List[int] = field(default_factory=list)
    certified_distinct: List[int] = field(default_factory=list)
    certified_real: List[int] = field(default_factory=list)

    def as_points(self, key: str) -> List[Point]:
        return [self.points[i] for i in getattr(self, key)]


def select_distinct(points: Sequence[Point], constants: Sequence[AlphaConstants],
                    candidates: Sequence[int]) -> List[int]:
    """Greedy pairwise-distinct subset of ``candidates`` in input order.

    A candidate Same as a kept point replaces it if its beta is smaller; a
    candidate Undecided against any kept point is dropped.
    """
    kept: List[int] = []
    for i in candidates:
        verdicts = [distinctness_from_constants(points[i], points[j], constants[i], constants[j])
                    for j in kept]
        if all(v is Distinctness.DISTINCT for v in verdicts):
            kept.append(i)
            continue
        same = [j for j, v in zip(kept, verdicts) if v is Distinctness.SAME]
        undecided = [j for j, v in zip(kept, verdicts) if v is Distinctness.UNDECIDED]
        if same and not undecided and len(same) == 1:
            j = same[0]
            if constants[i].beta < constants[j].beta:
                kept[kept.index(j)] = i
    return sorted(kept)


def alpha_theory_certification(F: PolySystem, sols: Sequence, ctx: ExactBoundContext | None = None
                               ) -> AlphaCertification:
    """Regularity, distinctness and realness of every point in ``sols``."""
    points = [F.check_point(x) for x in sols]
    constants = [compute_constants(F, x, ctx) for x in points]
    result = AlphaCertification(points, constants, [c.alpha for c in constants])
    result.certified_regular = [i for i, c in enumerate(constants) if is_regular(c)]
    result.certified_distinct = select_distinct(points, constants, result.certified_regular)
    if F.has_real_coefficients():
        result.certified_real = [i for i in result.certified_distinct
                                 if realness_from_constants(points[i], constants[i]) is Realness.REAL]
    return result
