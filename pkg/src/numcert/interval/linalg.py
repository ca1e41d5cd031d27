"""Interval vectors (boxes) and interval matrices."""

from __future__ import annotations

from typing import Iterable, List, Sequence

import numpy as np

from ..poly.scalar import Mode
from ..poly.system import Point
from .arith import ONE, ZERO, ComplexInterval, _cx, parse_complex_interval
from .rounding import add_up


class IntervalBox(tuple):
    """An element of IC^n: a tuple of complex intervals."""

    def __new__(cls, entries: Iterable):
        return super().__new__(cls, (_cx(e) for e in entries))

    @classmethod
    def from_point(cls, x) -> "IntervalBox":
        """Degenerate box at ``x`` (exact coordinates are enclosed tightly)."""
        return cls(ComplexInterval.enclose(c) for c in x)

    @property
    def is_unbounded(self) -> bool:
        return any(e.is_unbounded for e in self)

    def midpoint(self) -> Point:
        return Point(tuple(e.mid for e in self), Mode.APPROX)

    def widths(self) -> List[float]:
        return [e.width for e in self]

    def max_width(self) -> float:
        return max(self.widths(), default=0.0)

    def conjugate(self) -> "IntervalBox":
        return IntervalBox(e.conjugate() for e in self)

    def contains(self, other) -> bool:
        """Componentwise containment of a point or of another box."""
        if len(other) != len(self):
            raise ValueError("dimension mismatch")
        if self.is_unbounded:
            return False
        return all(a.contains(b) for a, b in zip(self, other))

    def is_subset(self, other: "IntervalBox") -> bool:
        return IntervalBox(other).contains(self)

    def is_disjoint(self, other: "IntervalBox") -> bool:
        return any(a.is_disjoint(b) for a, b in zip(self, other))

    def __add__(self, other):
        return IntervalBox(a + b for a, b in zip(self, _box(other, len(self))))

    def __sub__(self, other):
        return IntervalBox(a - b for a, b in zip(self, _box(other, len(self))))

    def __neg__(self):
        return IntervalBox(-a for a in self)

    def format(self, digits=None) -> str:
        return " ".join(e.format(digits) for e in self)

    def __str__(self):
        return "| " + self.format() + " |"

    def __repr__(self):
        return f"IntervalBox({self.format()})"


def _box(v, n) -> IntervalBox:
    if isinstance(v, IntervalBox):
        if len(v) != n:
            raise ValueError("dimension mismatch")
        return v
    return IntervalBox(v)


def parse_box(text: str) -> IntervalBox:
    """Boxes are written as complex interval literals separated by ``;``."""
    return IntervalBox(parse_complex_interval(part) for part in text.split(";") if part.strip())


def _sum(items: Sequence[ComplexInterval]) -> ComplexInterval:
    acc = items[0]
    for it in items[1:]:
        acc = acc + it
    return acc


class IntervalMatrix:
    """Dense rows x cols grid of complex intervals."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(_cx(e) for e in row) for row in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged interval matrix")
        self.shape = (len(self.rows), widths.pop() if widths else 0)

    @classmethod
    def identity(cls, n: int) -> "IntervalMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_array(cls, A) -> "IntervalMatrix":
        """Degenerate interval matrix from a point matrix."""
        A = np.asarray(A, dtype=complex)
        return cls([[ComplexInterval.point(v) for v in row] for row in A])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntervalMatrix) and self.rows == other.rows

    def __add__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        self._same_shape(other)
        return IntervalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        self._same_shape(other)
        return IntervalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, IntervalMatrix):
            return interval_matrix_mul(self, other)
        vec = IntervalBox(other)
        if len(vec) != self.shape[1]:
            raise ValueError("dimension mismatch in matrix-vector product")
        return IntervalBox(_sum([a * b for a, b in zip(row, vec)]) for row in self.rows)

    __mul__ = __matmul__

    def __pow__(self, k: int) -> "IntervalMatrix":
        if self.shape[0] != self.shape[1]:
            raise ValueError("power of a non-square matrix")
        if k == 0:
            return IntervalMatrix.identity(self.shape[0])
        result = self
        for _ in range(k - 1):
            result = result @ self
        return result

    def norm(self) -> float:
        """Upper bound on the max-norm operator norm of every member matrix.

        Max over rows of the sum of entry magnitudes, accumulated upward.
        """
        best = 0.0
        for row in self.rows:
            s = 0.0
            for e in row:
                s = add_up(s, e.mag())
            best = max(best, s)
        return best

    def format(self, digits=None) -> str:
        return "\n".join("| " + " ".join(e.format(digits) for e in row) + " |" for row in self.rows)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"IntervalMatrix({self.rows!r})"


def interval_matrix_mul(A: IntervalMatrix, B: IntervalMatrix) -> IntervalMatrix:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"inner dimensions disagree: {A.shape} x {B.shape}")
    cols = list(zip(*B.rows)) if B.rows else []
    return IntervalMatrix([[_sum([a * b for a, b in zip(row, col)]) for col in cols]
                           for row in A.rows])
