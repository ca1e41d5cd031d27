"""Coefficient fields: IEEE complex doubles and exact Gaussian rationals."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union


class Mode(str, enum.Enum):
    APPROX = "approx"
    EXACT = "exact"


class ModeMismatchError(ValueError):
    """Raised when a system and a point live in different coefficient rings."""


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An element ``re + im*i`` of Q(i), kept exactly."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        if isinstance(other, float):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*ii"
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {abs(self.im)}*ii)"


Scalar = Union[complex, GaussianRational]

I_EXACT = GaussianRational(0, 1)


def zero(mode: Mode) -> Scalar:
    return GaussianRational(0) if mode is Mode.EXACT else 0j


def one(mode: Mode) -> Scalar:
    return GaussianRational(1) if mode is Mode.EXACT else 1 + 0j


def to_scalar(value, mode: Mode) -> Scalar:
    """Convert ``value`` into the coefficient field of ``mode``.

    Floats are refused in exact mode since they would silently import
    rounding error; pass a string or a Fraction instead.
    """
    if mode is Mode.EXACT:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        if isinstance(value, str):
            return GaussianRational(Fraction(value))
        if isinstance(value, tuple) and len(value) == 2:
            return GaussianRational(Fraction(value[0]), Fraction(value[1]))
        raise ModeMismatchError(
            f"{type(value).__name__} value {value!r} is not an exact scalar")
    if isinstance(value, GaussianRational):
        raise ModeMismatchError("exact scalar supplied in approximate mode")
    if isinstance(value, tuple) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def abs2(z: Scalar):
    """Squared modulus: exact Fraction for Gaussian rationals, float otherwise."""
    if isinstance(z, GaussianRational):
        return z.abs2()
    return z.real * z.real + z.imag * z.imag


def is_real_scalar(z: Scalar) -> bool:
    if isinstance(z, GaussianRational):
        return z.im == 0
    return complex(z).imag == 0.0


def conjugate(z: Scalar) -> Scalar:
    return z.conjugate()


def scalar_mode(z) -> Mode:
    return Mode.EXACT if isinstance(z, GaussianRational) else Mode.APPROX
