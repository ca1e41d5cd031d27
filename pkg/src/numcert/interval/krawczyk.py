"""Interval extensions of polynomial systems and the Krawczyk test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from ..alpha import check_real_coefficients, compute_constants
from ..poly.linalg import is_numerically_singular
from ..poly.polynomial import Polynomial
from ..poly.system import Point, PolySystem, evaluate_jacobian
from .arith import ZERO, ComplexInterval, RealInterval, interval_pow
from .linalg import IntervalBox, IntervalMatrix
from .rounding import add_down, add_up

DEFAULT_INFLATION = 4.0


class SingularJacobianError(ValueError):
    """F'(x) is numerically singular; the point needs the deflation path."""


def _poly_extension(p: Polynomial, box: IntervalBox) -> ComplexInterval:
    acc = ZERO
    for m, c in p.terms.items():
        t = ComplexInterval.enclose(c)
        for j, e in enumerate(m):
            if e:
                t = t * interval_pow(box[j], e)
        acc = acc + t
    return acc


def _check_box(F: PolySystem, I) -> IntervalBox:
    I = IntervalBox(I)
    if len(I) != F.num_vars:
        raise ValueError(f"box has {len(I)} entries, system has {F.num_vars} variables")
    return I


def interval_extension_eval(F: PolySystem, I) -> IntervalBox:
    """Natural interval extension: an enclosure of ``{F(x) : x in I}``."""
    I = _check_box(F, I)
    return IntervalBox(_poly_extension(p, I) for p in F.polys)


def interval_extension_jacobian(F: PolySystem, I) -> IntervalMatrix:
    """Enclosure of ``{F'(x) : x in I}``, entrywise."""
    I = _check_box(F, I)
    return IntervalMatrix([[_poly_extension(q, I) for q in row] for row in F.jacobian])


def point_to_interval(x, r: float) -> IntervalBox:
    """Box of half-width ``r`` (in real and imaginary parts) around ``x``."""
    if not r > 0:
        raise ValueError("radius must be positive")
    entries = []
    for c in Point.coerce(x):
        z = complex(c)
        entries.append(ComplexInterval(RealInterval(add_down(z.real, -r), add_up(z.real, r)),
                                       RealInterval(add_down(z.imag, -r), add_up(z.imag, r))))
    return IntervalBox(entries)


def default_radius_min(x) -> float:
    return 1e-14 * (1.0 + math.sqrt(float(Point.coerce(x).to_approx().norm_sq())))


def point_to_interval_adaptive(F: PolySystem, x, inflation: float = DEFAULT_INFLATION,
                               radius_min: Optional[float] = None) -> IntervalBox:
    """Box around ``x`` sized from the Newton step: radius ``inflation * beta``."""
    Fa = F.to_approx()
    x = Fa.check_point(Point.coerce(x).to_approx())
    c = compute_constants(Fa, x)
    if c.singular_jacobian:
        raise SingularJacobianError(
            "Jacobian is singular at the point; use certify_singular (deflation) instead")
    floor = default_radius_min(x) if radius_min is None else radius_min
    return point_to_interval(x, max(inflation * c.beta, floor))


@dataclass(frozen=True)
class KrawczykResult:
    """The operator image and the data the tests need."""

    box: IntervalBox
    K: Optional[IntervalBox]
    contraction: float
    Y_singular: bool
    center: Optional[Point] = None


def krawczyk_operator(F: PolySystem, I) -> KrawczykResult:
    """``K = x - Y F(x) + (I_n - Y F'(I))(I - x)`` with ``x = m(I)``, ``Y = F'(x)^-1``."""
    Fa = F.to_approx()
    I = _check_box(Fa, I)
    if I.is_unbounded:
        return KrawczykResult(I, None, math.inf, True)
    x = I.midpoint()
    J = np.array(evaluate_jacobian(Fa, x), dtype=complex)
    if is_numerically_singular(J):
        return KrawczykResult(I, None, math.inf, True, x)
    Y = IntervalMatrix.from_array(np.linalg.inv(J))
    # F itself (not Fa) so that exact coefficients are enclosed, not rounded
    xbox = IntervalBox.from_point(x)
    Fx = interval_extension_eval(F, xbox)
    C = IntervalMatrix.identity(Fa.num_vars) - Y @ interval_extension_jacobian(F, I)
    K = (xbox - Y @ Fx) + C @ (I - xbox)
    return KrawczykResult(I, K, C.norm(), False, x)


def _unique(contraction: float) -> bool:
    # sqrt(2) * c < 1, decided exactly on the float bound c
    return math.isfinite(contraction) and 2 * Fraction(contraction) ** 2 < 1


@dataclass(frozen=True)
class KrawczykOutcome:
    passed: bool
    real: Optional[bool]
    result: Optional[KrawczykResult]
    diagnostic: str = ""

    @property
    def K(self):
        return self.result.K if self.result else None

    @property
    def box(self):
        return self.result.box if self.result else None


def _target_box(F, target, inflation, radius_min) -> IntervalBox:
    if isinstance(target, IntervalBox):
        return target
    seq = list(target)
    if seq and isinstance(seq[0], ComplexInterval):
        return IntervalBox(seq)
    return point_to_interval_adaptive(F, target, inflation, radius_min)


def krawczyk_check(F: PolySystem, target, realness: bool = False,
                   inflation: float = DEFAULT_INFLATION,
                   radius_min: Optional[float] = None) -> KrawczykOutcome:
    """Run the existence/uniqueness (and optionally realness) tests with diagnostics."""
    if realness:
        check_real_coefficients(F)
    try:
        box = _target_box(F, target, inflation, radius_min)
    except SingularJacobianError as exc:
        return KrawczykOutcome(False, False if realness else None, None, str(exc))
    res = krawczyk_operator(F, box)
    if res.Y_singular:
        return KrawczykOutcome(False, False if realness else None, res,
                               "midpoint Jacobian is numerically singular")
    contained = res.K.is_subset(box)
    unique = _unique(res.contraction)
    passed = contained and unique
    if not contained:
        diag = "K is not contained in the box"
    elif not unique:
        diag = f"contraction {res.contraction:.3g} too large for uniqueness"
    else:
        diag = ""
    real = None
    if realness:
        real = passed and res.K.conjugate().is_subset(box)
        if passed and not real:
            diag = "conjugate of K is not contained in the box"
    return KrawczykOutcome(passed, real, res, diag)


def krawczyk_test(F: PolySystem, target, **kw) -> bool:
    """True iff ``K(I)`` lies in ``I`` and ``sqrt(2) ||I_n - Y F'(I)|| < 1``."""
    return krawczyk_check(F, target, **kw).passed


def krawczyk_realness_test(F: PolySystem, target, **kw) -> bool:
    """Krawczyk test plus containment of the conjugate of ``K`` in the box."""
    return bool(krawczyk_check(F, target, realness=True, **kw).real)
