"""Directed rounding on top of round-to-nearest doubles.

Each sum or product is computed in the default rounding mode, and an
error-free transformation recovers the sign of the rounding error.  A bound
moves one ulp outward only when the rounded result is on the wrong side of the
exact value.  Where the transformation is not exact (overflow in the splitter,
results near the subnormal range), the error sign comes from a rational product.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2^27 + 1
_SPLIT_LIMIT = 2.0 ** 995
_TINY = 2.0 ** -960
_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def two_sum(a: float, b: float):
    """``(s, e)`` with ``s = fl(a + b)`` and ``a + b = s + e`` exactly (finite s)."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def _split(a: float):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float):
    """``(p, e)`` with ``a * b = p + e`` exactly, or ``e = None`` if unsafe."""
    p = a * b
    if p == 0.0 or not math.isfinite(p):
        return p, (0.0 if p == 0.0 and (a == 0.0 or b == 0.0) else None)
    if abs(a) > _SPLIT_LIMIT or abs(b) > _SPLIT_LIMIT or abs(p) < _TINY:
        return p, None
    ah, al = _split(a)
    bh, bl = _split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def signed_prod(a: float, b: float):
    """Like ``two_prod`` but falls back to a rational product for the error sign."""
    p, e = two_prod(a, b)
    if e is None and math.isfinite(p):
        diff = Fraction(a) * Fraction(b) - Fraction(p)
        e = (diff > 0) - (diff < 0)
    return p, e


def round_down(v: float, err) -> float:
    if err is None:
        return _down(v)
    return v if err >= 0 else _down(v)


def round_up(v: float, err) -> float:
    if err is None:
        return _up(v)
    return v if err <= 0 else _up(v)


def add_down(a: float, b: float) -> float:
    s, e = two_sum(a, b)
    return round_down(s, e) if math.isfinite(s) else s


def add_up(a: float, b: float) -> float:
    s, e = two_sum(a, b)
    return round_up(s, e) if math.isfinite(s) else s


def mul_down(a: float, b: float) -> float:
    p, e = signed_prod(a, b)
    return round_down(p, e) if math.isfinite(p) else p


def mul_up(a: float, b: float) -> float:
    p, e = signed_prod(a, b)
    return round_up(p, e) if math.isfinite(p) else p


def float_down(q) -> float:
    """Largest double <= the rational (or decimal string) ``q``."""
    q = Fraction(q)
    f = float(q)
    return f if Fraction(f) <= q else _down(f)


def float_up(q) -> float:
    q = Fraction(q)
    f = float(q)
    return f if Fraction(f) >= q else _up(f)


def hypot_up(a: float, b: float) -> float:
    """An upper bound on ``sqrt(a^2 + b^2)``."""
    h = math.hypot(a, b)
    if not math.isfinite(h):
        return h
    target = Fraction(a) ** 2 + Fraction(b) ** 2
    while Fraction(h) ** 2 < target:
        h = _up(h)
    return h
