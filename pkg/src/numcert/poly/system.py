"""Square polynomial systems, points, and the quantities alpha theory needs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, NamedTuple, Sequence

import numpy as np

from .linalg import solve_approx, solve_exact
from .parse import default_names, format_polynomial, parse_polynomial
from .polynomial import Polynomial
from .program import EvalProgram
from .scalar import GaussianRational, Mode, ModeMismatchError, abs2, to_scalar


class NonSquareSystemError(ValueError):
    pass


class ConstantEquationError(ValueError):
    """A member polynomial has degree 0 (or is identically zero)."""


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    """Candidate solution: a coordinate vector in C^n or Q(i)^n."""

    coords: tuple
    mode: Mode = Mode.APPROX

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_scalar(c, self.mode) for c in self.coords))

    @classmethod
    def coerce(cls, x, mode: Mode | None = None) -> "Point":
        if isinstance(x, Point):
            if mode is not None and x.mode != mode:
                raise ModeMismatchError(f"point is {x.mode.value}, system is {mode.value}")
            return x
        values = list(x)
        if mode is None:
            mode = (Mode.EXACT if values and all(isinstance(v, GaussianRational) for v in values)
                    else Mode.APPROX)
        return cls(tuple(values), mode)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def conjugate(self) -> "Point":
        return Point(tuple(c.conjugate() for c in self.coords), self.mode)

    def to_array(self) -> np.ndarray:
        return np.array([complex(c) for c in self.coords], dtype=complex)

    def to_approx(self) -> "Point":
        return Point(tuple(complex(c) for c in self.coords), Mode.APPROX)

    def norm_sq(self):
        return sum((abs2(c) for c in self.coords), Fraction(0) if self.mode is Mode.EXACT else 0.0)

    def is_finite(self) -> bool:
        return all(math.isfinite(c.real) and math.isfinite(c.imag)
                   for c in (complex(v) for v in self.coords))


def distance_sq(x: Point, y: Point):
    """Squared Euclidean distance, exact when both points are exact."""
    if len(x) != len(y):
        raise DimensionMismatchError("points of different dimension")
    if x.mode is Mode.EXACT and y.mode is Mode.EXACT:
        return sum((abs2(a - b) for a, b in zip(x, y)), Fraction(0))
    return float(np.sum(np.abs(x.to_array() - y.to_array()) ** 2))


class PolySystem:
    """A square system ``F = (f_1, ..., f_n)`` in ``n`` named variables."""

    def __init__(self, polys: Sequence[Polynomial], var_names: Sequence[str] | None = None):
        polys = list(polys)
        if not polys:
            raise NonSquareSystemError("empty system")
        n = polys[0].num_vars
        mode = polys[0].mode
        for k, p in enumerate(polys):
            if p.num_vars != n:
                raise DimensionMismatchError(f"polynomial {k} has {p.num_vars} variables, expected {n}")
            if p.mode != mode:
                raise ModeMismatchError(f"polynomial {k} is over a different coefficient ring")
        if len(polys) != n:
            raise NonSquareSystemError(f"system is not square: {len(polys)} equations in {n} variables")
        for k, p in enumerate(polys):
            if p.degree < 1:
                raise ConstantEquationError(f"polynomial {k} is constant")
        self.polys = tuple(polys)
        self.num_vars = n
        self.mode = mode
        self.var_names = tuple(var_names) if var_names is not None else tuple(default_names(n))
        if len(self.var_names) != n:
            raise DimensionMismatchError("wrong number of variable names")

    @classmethod
    def from_strings(cls, texts: Sequence[str], var_names: Sequence[str],
                     mode: Mode | str = Mode.APPROX) -> "PolySystem":
        return cls([parse_polynomial(t, var_names, mode) for t in texts], var_names)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, k):
        return self.polys[k]

    def __eq__(self, other):
        return (isinstance(other, PolySystem) and self.polys == other.polys
                and self.var_names == other.var_names)

    def __hash__(self):
        return hash((self.polys, self.var_names))

    def __repr__(self):
        body = ", ".join(format_polynomial(p, self.var_names) for p in self.polys)
        return f"PolySystem({{{body}}}, vars={list(self.var_names)}, mode={self.mode.value})"

    @property
    def degrees(self) -> List[int]:
        return [p.degree for p in self.polys]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def has_real_coefficients(self) -> bool:
        return all(p.has_real_coefficients() for p in self.polys)

    def to_strings(self) -> List[str]:
        return [format_polynomial(p, self.var_names) for p in self.polys]

    def to_approx(self) -> "PolySystem":
        if self.mode is Mode.APPROX:
            return self
        return PolySystem([p.to_approx() for p in self.polys], self.var_names)

    def scale(self, c) -> "PolySystem":
        return PolySystem([p.scale(c) for p in self.polys], self.var_names)

    @cached_property
    def jacobian(self) -> List[List[Polynomial]]:
        return [[p.diff(j) for j in range(self.num_vars)] for p in self.polys]

    @cached_property
    def program(self) -> EvalProgram:
        return EvalProgram(self.polys, self.jacobian)

    def check_point(self, x) -> Point:
        x = Point.coerce(x, self.mode)
        if len(x) != self.num_vars:
            raise DimensionMismatchError(f"point has {len(x)} coordinates, system has {self.num_vars} variables")
        return x


def evaluate(F: PolySystem, x) -> list:
    """``F(x)`` as a list of scalars."""
    x = F.check_point(x)
    return F.program.run(x.coords)[0]


def jacobian(F: PolySystem) -> List[List[Polynomial]]:
    return F.jacobian


def evaluate_jacobian(F: PolySystem, x) -> list:
    """Numeric (or exact) Jacobian at ``x`` as a list of rows."""
    x = F.check_point(x)
    return F.program.run(x.coords)[1]


def evaluate_with_jacobian(F: PolySystem, x):
    x = F.check_point(x)
    return F.program.run(x.coords)


class NewtonResult(NamedTuple):
    point: Point
    singular: bool


def newton_operator(F: PolySystem, x) -> NewtonResult:
    """One Newton step; returns ``x`` unchanged (flagged) when F'(x) is singular."""
    x = F.check_point(x)
    vals, jac = F.program.run(x.coords)
    if F.mode is Mode.EXACT:
        step = solve_exact(jac, [[v] for v in vals])
        if step is None:
            return NewtonResult(x, True)
        return NewtonResult(Point(tuple(a - s[0] for a, s in zip(x, step)), Mode.EXACT), False)
    step = solve_approx(np.array(jac, dtype=complex), np.array(vals, dtype=complex))
    if step is None:
        return NewtonResult(x, True)
    return NewtonResult(Point(tuple(x.to_array() - step), Mode.APPROX), False)


def bombieri_weyl_norm(f: Polynomial) -> float:
    return f.bombieri_weyl_norm()


def system_norm_sq(F):
    """Sum of squared Bombieri-Weyl norms; exact in exact mode.

    Accepts a :class:`PolySystem` or any sequence of polynomials, so that
    degenerate collections (zero or constant members) can still be measured.
    """
    polys = list(F)
    exact = bool(polys) and polys[0].mode is Mode.EXACT
    return sum((p.bombieri_weyl_norm_sq() for p in polys), Fraction(0) if exact else 0.0)


def system_norm(F) -> float:
    return math.sqrt(float(system_norm_sq(F)))


def projective_point_norm_sq(x):
    x = Point.coerce(x)
    return 1 + x.norm_sq()


def projective_point_norm(x) -> float:
    """``sqrt(1 + sum |x_i|^2)``."""
    return math.sqrt(float(projective_point_norm_sq(x)))


def delta_matrix(F: PolySystem, x) -> np.ndarray:
    """Diagonal matrix with entries ``sqrt(d_i) * ||(1,x)||^(d_i - 1)``."""
    x = F.check_point(x)
    r = projective_point_norm(x)
    return np.diag([math.sqrt(d) * r ** (d - 1) for d in F.degrees])


def delta_sq_diagonal(F: PolySystem, x) -> list:
    """Squares of the diagonal entries of :func:`delta_matrix`, exact in exact mode."""
    x = F.check_point(x)
    P = projective_point_norm_sq(x)
    return [d * P ** (d - 1) for d in F.degrees]
