"""Real and complex (rectangular) intervals with outward rounding."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rounding import (add_down, add_up, float_down, float_up, hypot_up,
                       signed_prod, round_down, round_up)

_INF = math.inf


@dataclass(frozen=True, slots=True)
class RealInterval:
    """Closed interval ``[lo, hi]``.

    Any overflow or NaN collapses to the unbounded sentinel ``[-inf, inf]``,
    which fails every containment-based certification test.
    """

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi) or math.isinf(lo) or math.isinf(hi):
            lo, hi = -_INF, _INF
        elif lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        # collapse signed zeros so that [0,-0] and [0,0] compare and print equal
        object.__setattr__(self, "lo", lo + 0.0)
        object.__setattr__(self, "hi", hi + 0.0)

    @classmethod
    def point(cls, v: float) -> "RealInterval":
        return cls(v, v)

    @classmethod
    def from_decimal(cls, lo, hi=None) -> "RealInterval":
        """Smallest double interval containing the exact decimals/rationals given."""
        hi = lo if hi is None else hi
        return cls(float_down(lo), float_up(hi))

    @property
    def is_unbounded(self) -> bool:
        return math.isinf(self.lo) or math.isinf(self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * self.lo + 0.5 * self.hi

    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, v) -> bool:
        if isinstance(v, RealInterval):
            return self.lo <= v.lo and v.hi <= self.hi
        if isinstance(v, Fraction):
            return Fraction(self.lo) <= v <= Fraction(self.hi) if not self.is_unbounded else True
        return self.lo <= v <= self.hi

    __contains__ = contains

    def __add__(self, other: "RealInterval") -> "RealInterval":
        other = _real(other)
        return RealInterval(add_down(self.lo, other.lo), add_up(self.hi, other.hi))

    def __neg__(self) -> "RealInterval":
        return RealInterval(-self.hi, -self.lo)

    def __sub__(self, other: "RealInterval") -> "RealInterval":
        return self + (-_real(other))

    def __mul__(self, other: "RealInterval") -> "RealInterval":
        other = _real(other)
        if self.is_unbounded or other.is_unbounded:
            return UNBOUNDED
        lows, highs = [], []
        for a in (self.lo, self.hi):
            for b in (other.lo, other.hi):
                p, e = signed_prod(a, b)
                if not math.isfinite(p):
                    return UNBOUNDED
                lows.append(round_down(p, e))
                highs.append(round_up(p, e))
        return RealInterval(min(lows), max(highs))

    def hull(self, other: "RealInterval") -> "RealInterval":
        return RealInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def is_disjoint(self, other: "RealInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def __str__(self):
        return f"[{format_endpoint(self.lo)},{format_endpoint(self.hi)}]"


UNBOUNDED = RealInterval(-_INF, _INF)
ZERO_REAL = RealInterval(0.0, 0.0)


def _real(v) -> RealInterval:
    if isinstance(v, RealInterval):
        return v
    return RealInterval.point(float(v))


def format_endpoint(v: float, digits: Optional[int] = None) -> str:
    if v == 0:
        return "0"
    if digits is None:
        return repr(v)
    return f"{v:.{digits}g}"


@dataclass(frozen=True, slots=True)
class ComplexInterval:
    """Rectangle ``re + i*im`` in the complex plane."""

    re: RealInterval
    im: RealInterval = ZERO_REAL

    @classmethod
    def point(cls, z) -> "ComplexInterval":
        z = complex(z)
        return cls(RealInterval.point(z.real), RealInterval.point(z.imag))

    @classmethod
    def enclose(cls, z) -> "ComplexInterval":
        """Tight enclosure of a complex float or a Gaussian rational."""
        if hasattr(z, "re") and isinstance(getattr(z, "re"), Fraction):
            return cls(RealInterval.from_decimal(z.re), RealInterval.from_decimal(z.im))
        return cls.point(z)

    @property
    def is_unbounded(self) -> bool:
        return self.re.is_unbounded or self.im.is_unbounded

    @property
    def mid(self) -> complex:
        return complex(self.re.mid, self.im.mid)

    @property
    def width(self) -> float:
        """Largest side of the rectangle."""
        return max(self.re.width, self.im.width)

    def mag(self) -> float:
        """Upper bound on ``sup |z|`` over the rectangle."""
        if self.is_unbounded:
            return _INF
        return hypot_up(self.re.mag(), self.im.mag())

    def conjugate(self) -> "ComplexInterval":
        return ComplexInterval(self.re, -self.im)

    def contains(self, z) -> bool:
        if isinstance(z, ComplexInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        if hasattr(z, "re") and isinstance(getattr(z, "re"), Fraction):
            return self.re.contains(z.re) and self.im.contains(z.im)
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    __contains__ = contains

    def is_disjoint(self, other: "ComplexInterval") -> bool:
        return self.re.is_disjoint(other.re) or self.im.is_disjoint(other.im)

    def __add__(self, other) -> "ComplexInterval":
        other = _cx(other)
        return ComplexInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ComplexInterval":
        return ComplexInterval(-self.re, -self.im)

    def __sub__(self, other) -> "ComplexInterval":
        other = _cx(other)
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "ComplexInterval":
        return _cx(other) - self

    def __mul__(self, other) -> "ComplexInterval":
        other = _cx(other)
        return ComplexInterval(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ComplexInterval":
        return interval_pow(self, k)

    def __str__(self):
        return self.format()

    def format(self, digits: Optional[int] = None) -> str:
        return (f"[{format_endpoint(self.re.lo, digits)},{format_endpoint(self.re.hi, digits)}]"
                f" + [{format_endpoint(self.im.lo, digits)},{format_endpoint(self.im.hi, digits)}]*ii")


ZERO = ComplexInterval(ZERO_REAL, ZERO_REAL)
ONE = ComplexInterval(RealInterval(1.0, 1.0), ZERO_REAL)


def _cx(v) -> ComplexInterval:
    if isinstance(v, ComplexInterval):
        return v
    if isinstance(v, RealInterval):
        return ComplexInterval(v, ZERO_REAL)
    return ComplexInterval.enclose(v)


def make_complex_interval(re: RealInterval, im: RealInterval | None = None) -> ComplexInterval:
    """Complex interval from a real part and an optional imaginary part."""
    return ComplexInterval(_real_checked(re), ZERO_REAL if im is None else _real_checked(im))


def _real_checked(v) -> RealInterval:
    if isinstance(v, RealInterval):
        return v
    lo, hi = v
    return RealInterval(lo, hi)


def interval_add(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    return a + b


def interval_sub(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    return a - b


def interval_mul(a: ComplexInterval, b: ComplexInterval) -> ComplexInterval:
    return a * b


def interval_pow(a: ComplexInterval, k: int) -> ComplexInterval:
    """``a^k`` by left-associated repeated multiplication, ``a^0 = 1``."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("interval powers need a nonnegative integer exponent")
    if k == 0:
        return ONE
    result = a
    for _ in range(k - 1):
        result = result * a
    return result


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?|[-+]?inf"
_REAL_RE = rf"\[\s*({_NUM})\s*,\s*({_NUM})\s*\]"
_CX_RE = re.compile(rf"^\s*{_REAL_RE}\s*(?:\+\s*{_REAL_RE}\s*\*\s*ii)?\s*$")


def parse_complex_interval(text: str) -> ComplexInterval:
    """Parse ``[lo,hi] + [lo,hi]*ii`` (imaginary part optional).

    Decimal endpoints are rounded outward so the box contains the decimals.
    """
    m = _CX_RE.match(text)
    if not m:
        raise ValueError(f"not a complex interval literal: {text!r}")
    a, b, c, d = m.groups()
    re_ = RealInterval.from_decimal(a, b) if "inf" not in a + b else RealInterval(float(a), float(b))
    if c is None:
        return ComplexInterval(re_, ZERO_REAL)
    return ComplexInterval(re_, RealInterval.from_decimal(c, d))
