import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import (I1, I2, PRINTED_CUBE, PRINTED_M2_DIAG, PRINTED_M2_OFF, PRINTED_PRODUCT,
                     PRINTED_SUM, PRINTED_UNIT_BOX)

from numcert.interval import (ONE, UNBOUNDED, ZERO, ComplexInterval, IntervalBox, IntervalMatrix,
                              RealInterval, interval_extension_eval, interval_extension_jacobian,
                              interval_pow, make_complex_interval, parse_box,
                              parse_complex_interval, point_to_interval)
from numcert.interval.rounding import (add_down, add_up, float_down, float_up, hypot_up, mul_down,
                                       mul_up, two_prod, two_sum)
from numcert.poly import PolySystem


def ci(pair):
    (a, b), (c, d) = pair
    return ComplexInterval(RealInterval(a, b), RealInterval(c, d))


def close(z, pair, tol=1e-9):
    (a, b), (c, d) = pair
    return all(abs(u - v) <= tol for u, v in
               [(z.re.lo, a), (z.re.hi, b), (z.im.lo, c), (z.im.hi, d)])


# fixtures -------------------------------------------------------------------

def test_printed_arithmetic():
    i1, i2 = ci(I1), ci(I2)
    assert close(i1 + i2, PRINTED_SUM)
    assert close(i1 * i2, PRINTED_PRODUCT)
    assert close(i1 ** 3, PRINTED_CUBE)
    M2 = IntervalMatrix([[i1, i2], [i2, i1]]) ** 2
    assert close(M2[0, 0], PRINTED_M2_DIAG) and close(M2[1, 1], PRINTED_M2_DIAG)
    assert close(M2[0, 1], PRINTED_M2_OFF) and close(M2[1, 0], PRINTED_M2_OFF)


def test_single_real_interval_has_zero_imaginary_part():
    z = make_complex_interval(RealInterval(.2, .3))
    assert z.im == RealInterval(0, 0)
    assert z.format() == "[0.2,0.3] + [0,0]*ii"


def test_point_to_interval_radius_one():
    box = point_to_interval((-1.6, -1.3j), 1)
    for z, pair in zip(box, PRINTED_UNIT_BOX):
        assert close(z, pair, 1e-15)
    with pytest.raises(ValueError):
        point_to_interval((0,), 0)


def test_format_parse_round_trip():
    # decimals are rounded outward, so the re-read interval encloses z within an ulp
    z = ci(I1)
    w = parse_complex_interval(z.format())
    assert w.re.contains(z.re) and w.im.contains(z.im)
    for a, b in [(w.re.lo, z.re.lo), (w.re.hi, z.re.hi), (w.im.lo, z.im.lo), (w.im.hi, z.im.hi)]:
        assert a == b or math.nextafter(a, b) == b
    box = parse_box("[0,2]+[-1,1]*ii; [1.5,2.5]")
    assert len(box) == 2 and box[1].im == RealInterval(0, 0)
    with pytest.raises(ValueError):
        parse_complex_interval("[1,2")


def test_decimal_literals_rounded_outward():
    z = parse_complex_interval("[0.1,0.1] + [0.3,0.3]*ii")
    assert z.re.contains(Fraction(1, 10)) and z.im.contains(Fraction(3, 10))
    assert z.re.lo < z.re.hi


def test_unbounded_sentinel():
    assert RealInterval(math.nan, 1).is_unbounded
    assert RealInterval(0, math.inf).is_unbounded
    big = ComplexInterval(RealInterval(1e300, 1e300))
    assert (big * big).is_unbounded
    assert UNBOUNDED.is_unbounded
    with pytest.raises(ValueError):
        RealInterval(2, 1)


def test_constants_and_identity():
    z = ci(I1)
    assert z + ZERO == z and z * ONE == z
    assert interval_pow(z, 0) == ONE


def test_matrix_shapes_and_norm():
    A = IntervalMatrix([[ONE, ZERO], [ZERO, ONE]])
    assert A.norm() == 1.0
    with pytest.raises(ValueError):
        A @ IntervalMatrix([[ONE]])
    with pytest.raises(ValueError):
        IntervalMatrix([[ONE], [ONE, ONE]])


def test_box_relations():
    a = point_to_interval((0, 0), 1)
    b = point_to_interval((0, 0), 0.5)
    c = point_to_interval((5, 0), 1)
    assert b.is_subset(a) and not a.is_subset(b)
    assert a.is_disjoint(c) and not a.is_disjoint(b) and not a.is_disjoint(a)


# rounding primitives --------------------------------------------------------

finite = st.floats(-1e150, 1e150, allow_nan=False, allow_infinity=False)


@given(finite, finite)
def test_directed_sum_brackets_exact(a, b):
    exact = Fraction(a) + Fraction(b)
    assert Fraction(add_down(a, b)) <= exact <= Fraction(add_up(a, b))
    s, e = two_sum(a, b)
    assert Fraction(s) + Fraction(e) == exact


@settings(max_examples=500)
@given(finite, finite)
def test_directed_product_brackets_exact(a, b):
    exact = Fraction(a) * Fraction(b)
    lo, hi = mul_down(a, b), mul_up(a, b)
    assert Fraction(lo) <= exact <= Fraction(hi)
    assert hi == lo or math.nextafter(lo, math.inf) == hi
    p, e = two_prod(a, b)
    if e is not None:
        assert Fraction(p) + Fraction(e) == exact


@given(st.fractions(min_value=-10**6, max_value=10**6))
def test_float_rounding_of_rationals(q):
    assert Fraction(float_down(q)) <= q <= Fraction(float_up(q))


@given(st.floats(0, 1e100), st.floats(0, 1e100))
def test_hypot_up_is_upper_bound(a, b):
    h = hypot_up(a, b)
    assert Fraction(h) ** 2 >= Fraction(a) ** 2 + Fraction(b) ** 2


# Monte Carlo containment with an exact rational oracle ---------------------

bounded = st.floats(-4, 4, allow_nan=False)


@st.composite
def intervals_with_member(draw):
    a, b, c, d = (draw(bounded) for _ in range(4))
    lo_r, hi_r = sorted((a, b))
    lo_i, hi_i = sorted((c, d))
    t, u = draw(st.floats(0, 1)), draw(st.floats(0, 1))
    re_ = Fraction(lo_r) + (Fraction(hi_r) - Fraction(lo_r)) * Fraction(t)
    im_ = Fraction(lo_i) + (Fraction(hi_i) - Fraction(lo_i)) * Fraction(u)
    return ComplexInterval(RealInterval(lo_r, hi_r), RealInterval(lo_i, hi_i)), (re_, im_)


def member(z, pair):
    return z.re.contains(pair[0]) and z.im.contains(pair[1])


def cmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


@settings(max_examples=300)
@given(intervals_with_member(), intervals_with_member())
def test_arithmetic_contains_exact_results(A, B):
    (X, x), (Y, y) = A, B
    assert member(X + Y, (x[0] + y[0], x[1] + y[1]))
    assert member(X - Y, (x[0] - y[0], x[1] - y[1]))
    assert member(X * Y, cmul(x, y))


@settings(max_examples=150)
@given(intervals_with_member(), st.integers(0, 6))
def test_power_contains_exact_power(A, k):
    X, x = A
    p = (Fraction(1), Fraction(0))
    for _ in range(k):
        p = cmul(p, x)
    assert member(X ** k, p)


@settings(max_examples=100)
@given(intervals_with_member(), intervals_with_member(), intervals_with_member(),
       intervals_with_member())
def test_matrix_product_contains_exact(A, B, C, D):
    M = IntervalMatrix([[A[0], B[0]], [C[0], D[0]]])
    m = [[A[1], B[1]], [C[1], D[1]]]
    P = M @ M
    for i in range(2):
        for j in range(2):
            s = cmul(m[i][0], m[0][j])
            t = cmul(m[i][1], m[1][j])
            assert member(P[i, j], (s[0] + t[0], s[1] + t[1]))


@settings(max_examples=100)
@given(intervals_with_member(), intervals_with_member())
def test_inclusion_monotonicity(A, B):
    X, _ = A
    Y, _ = B
    hull = ComplexInterval(X.re.hull(Y.re), X.im.hull(Y.im))
    Z = ci(I1)
    for op in (lambda u: u + Z, lambda u: u * Z, lambda u: u ** 2):
        big, small = op(hull), op(X)
        assert big.re.contains(small.re) and big.im.contains(small.im)


@settings(max_examples=100)
@given(intervals_with_member(), intervals_with_member())
def test_conjugation_commutes_with_product(A, B):
    X, _ = A
    Y, _ = B
    lhs, rhs = (X * Y).conjugate(), X.conjugate() * Y.conjugate()
    assert lhs.re == rhs.re
    assert lhs.im.contains(rhs.im) and rhs.im.contains(lhs.im)


# interval extensions -------------------------------------------------------

@settings(max_examples=100)
@given(intervals_with_member(), intervals_with_member())
def test_extension_encloses_exact_values(A, B):
    F = PolySystem.from_strings(["x^2 + y^2 - 1", "x - y^2"], ["x", "y"])
    (X, x), (Y, y) = A, B
    assume(not X.is_unbounded and not Y.is_unbounded)
    box = IntervalBox([X, Y])
    vals = interval_extension_eval(F, box)
    x2, y2 = cmul(x, x), cmul(y, y)
    assert member(vals[0], (x2[0] + y2[0] - 1, x2[1] + y2[1]))
    assert member(vals[1], (x[0] - y2[0], x[1] - y2[1]))
    J = interval_extension_jacobian(F, box)
    assert member(J[0, 0], (2 * x[0], 2 * x[1]))
    assert member(J[1, 1], (-2 * y[0], -2 * y[1]))
