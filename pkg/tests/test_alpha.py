import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (CP_COMPLEX_POINT, CP_REAL_POINT, LINK_EXACT_POINT, LINK_ROOT_A, LINK_ROOT_A_PERTURBED,
                     LINK_ROOT_B, PRINTED_ALPHA_VALUES_SQ, PRINTED_CONSTANTS_SQ, PRINTED_EXACT_SQ,
                     constants_mp, true_gamma_univariate)

from numcert.alpha import (ALPHA_REGULAR, AlphaConstants, Distinctness, ExactBoundContext,
                           NonRealSystemError, Realness, alpha_theory_certification,
                           certify_distinct, certify_real, certify_regular, compute_constants,
                           rational_sqrt_upper, select_distinct)
from numcert.poly import GaussianRational, Mode, Point, PolySystem, Polynomial, newton_operator


def test_regular_threshold_value():
    assert ALPHA_REGULAR == pytest.approx(0.157670780786754)


def test_printed_constants_are_squares(link):
    c = compute_constants(link, LINK_ROOT_A)
    a2, b2, g2 = c.squared()
    assert g2 == pytest.approx(PRINTED_CONSTANTS_SQ[2], rel=1e-5)
    assert a2 == pytest.approx(PRINTED_CONSTANTS_SQ[0], rel=1e-4)
    assert b2 == pytest.approx(PRINTED_CONSTANTS_SQ[1], rel=1e-4)
    assert c.alpha == pytest.approx(c.beta * c.gamma_bound)
    assert c.gamma_bound == pytest.approx(math.sqrt(PRINTED_CONSTANTS_SQ[2]), rel=1e-5)


def test_printed_alpha_values_are_squares(link):
    res = alpha_theory_certification(link, [LINK_ROOT_A_PERTURBED, LINK_ROOT_B])
    sq = [c.squared()[0] for c in res.constants]
    assert sq == pytest.approx(list(PRINTED_ALPHA_VALUES_SQ), rel=1e-4)


def test_exact_constants_reproduce_printed_rationals(link_exact):
    c = compute_constants(link_exact, Point(LINK_EXACT_POINT, Mode.EXACT))
    assert c.squared() == PRINTED_EXACT_SQ
    assert all(isinstance(v, Fraction) for v in c.as_tuple())


@pytest.mark.parametrize("slack", [Fraction(1, 10), Fraction(1, 10**6), Fraction(1, 10**12)])
def test_exact_constants_sound_against_mp(link_exact, slack):
    c = compute_constants(link_exact, Point(LINK_EXACT_POINT, Mode.EXACT), ExactBoundContext(slack))
    terms = [{m: complex(v) for m, v in p.terms.items()} for p in link_exact.polys]
    ref = constants_mp(terms, link_exact.degrees, [complex(v) for v in LINK_EXACT_POINT])
    for v, r in zip(c.as_tuple(), ref):
        q = Fraction(v) / Fraction(str(r))
        assert 1 <= q <= (1 + slack) ** 2 * Fraction(1000001, 1000000)


def test_sqrt_upper_exact_squares_and_bounds():
    assert rational_sqrt_upper(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt_upper(0) == 0
    with pytest.raises(ValueError):
        rational_sqrt_upper(-1)
    with pytest.raises(ValueError):
        ExactBoundContext(0)


@settings(max_examples=200)
@given(st.fractions(min_value=Fraction(1, 10**9), max_value=10**9),
       st.integers(1, 12), st.integers(1, 12))
def test_sqrt_upper_monotone_in_slack(q, a, b):
    s1, s2 = sorted((Fraction(1, 10**a), Fraction(1, 10**b)))
    r1 = rational_sqrt_upper(q, ExactBoundContext(s1))
    r2 = rational_sqrt_upper(q, ExactBoundContext(s2))
    assert r1 * r1 >= q and r1 <= r2
    assert r2 * r2 <= q * (1 + s2) ** 2


def test_link_verdicts(link):
    assert certify_regular(link, LINK_ROOT_A)
    assert certify_distinct(link, LINK_ROOT_A, LINK_ROOT_B) is Distinctness.DISTINCT
    assert certify_distinct(link, LINK_ROOT_A, LINK_ROOT_A_PERTURBED) is Distinctness.SAME
    assert certify_real(link, LINK_ROOT_A_PERTURBED) is Realness.REAL


def test_not_real(circle_parabola):
    assert certify_real(circle_parabola, CP_COMPLEX_POINT) is Realness.NOT_REAL
    assert certify_real(circle_parabola, CP_REAL_POINT) is Realness.REAL


def test_realness_needs_real_coefficients():
    F = PolySystem.from_strings(["x - ii"], ["x"])
    with pytest.raises(NonRealSystemError):
        certify_real(F, (1j,))


def test_linear_constants():
    F = PolySystem.from_strings(["x - 1"], ["x"])
    c = compute_constants(F, (1.0,))
    assert c.alpha == 0 and c.beta == 0 and math.isfinite(c.gamma_bound)


def test_singular_point_infinite(cusp):
    c = compute_constants(cusp, (0, 0))
    assert c.singular_jacobian and all(math.isinf(v) for v in c.as_tuple())
    assert not certify_regular(cusp, (0, 0))
    assert certify_distinct(cusp, (0, 0), (0, 0)) is Distinctness.UNDECIDED
    assert certify_real(cusp, (0, 0)) is Realness.UNDECIDED


def test_far_point_not_certified(circle_parabola):
    assert not certify_regular(circle_parabola, (0.3, 0.2))
    assert certify_distinct(circle_parabola, (0.3, 0.2), (0.31, 0.2)) is Distinctness.UNDECIDED


def test_alpha_theory_certification_batch(link):
    res = alpha_theory_certification(link, [LINK_ROOT_A, LINK_ROOT_B])
    assert res.certified_regular == res.certified_distinct == res.certified_real == [0, 1]
    assert alpha_theory_certification(link, []).certified_regular == []


def test_select_distinct_keeps_better_duplicate(link):
    refined = newton_operator(link, LINK_ROOT_A).point
    pts = [Point(LINK_ROOT_A), refined, Point(LINK_ROOT_B)]
    consts = [compute_constants(link, p) for p in pts]
    assert select_distinct(pts, consts, [0, 1, 2]) == [1, 2]


def _univariate(coeffs):
    return PolySystem([Polynomial(1, {(k,): complex(c) for k, c in enumerate(coeffs)})], ["t"])


def test_gamma_bound_dominates_true_gamma():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 100:
        d = int(rng.integers(2, 8))
        coeffs = rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1)
        x = complex(*rng.standard_normal(2) * rng.uniform(0.1, 3))
        c = compute_constants(_univariate(coeffs), (x,))
        if c.singular_jacobian:
            continue
        assert c.gamma_bound >= float(true_gamma_univariate(list(coeffs), x)) * (1 - 1e-12)
        checked += 1


@settings(max_examples=40)
@given(s=st.floats(0.01, 100))
def test_alpha_invariant_under_equation_scaling(link, s):
    a = compute_constants(link, LINK_ROOT_A)
    b = compute_constants(link.scale(s), LINK_ROOT_A)
    assert b.alpha == pytest.approx(a.alpha, rel=1e-9)
    assert b.beta == pytest.approx(a.beta, rel=1e-9)


def test_approx_matches_exact_on_rational_input(link_exact):
    exact = compute_constants(link_exact, Point(LINK_EXACT_POINT, Mode.EXACT))
    approx = compute_constants(link_exact.to_approx(), tuple(complex(v) for v in LINK_EXACT_POINT))
    for e, a in zip(exact.as_tuple(), approx.as_tuple()):
        assert float(e) == pytest.approx(a, rel=1e-5)


def test_exact_singular_point():
    F = PolySystem.from_strings(["x^2 + y", "x^3 - y^2"], ["x", "y"], Mode.EXACT)
    c = compute_constants(F, Point((GaussianRational(0), GaussianRational(0)), Mode.EXACT))
    assert c.singular_jacobian


def test_exact_mode_regular_verdict(link_exact):
    # alpha here is large (the point is crude): the exact comparison must say no
    c = compute_constants(link_exact, Point(LINK_EXACT_POINT, Mode.EXACT))
    assert certify_regular(link_exact, Point(LINK_EXACT_POINT, Mode.EXACT)) == (float(c.alpha) < ALPHA_REGULAR)


def test_quadratic_envelope_at_certified_points(link, circle_parabola):
    from test_acceptance import quadratic_envelope_holds
    for F, x in [(link, LINK_ROOT_A), (link, LINK_ROOT_B), (circle_parabola, CP_COMPLEX_POINT),
                 (circle_parabola, CP_REAL_POINT)]:
        assert certify_regular(F, x)
        assert quadratic_envelope_holds(F, x)


def test_alpha_constants_infinite_squared():
    c = AlphaConstants.infinite()
    assert all(math.isinf(v) for v in c.squared())


def test_mpmath_oracle_sanity():
    # the oracle itself: gamma of t^2 - 1 at t = 1 is |f''/2f'| = 1/2
    assert true_gamma_univariate([-1, 0, 1], 1.0) == pytest.approx(mpmath.mpf(0.5))
