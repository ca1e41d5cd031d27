"""Sparse multivariate polynomials over C (floats) or Q(i) (exact)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .scalar import (Mode, ModeMismatchError, Scalar,
                     abs2, is_real_scalar, one, to_scalar, zero)

Monomial = Tuple[int, ...]


def grlex_key(exponents: Monomial):
    """Sort key for graded lexicographic order (highest degree first)."""
    return (-sum(exponents), tuple(-e for e in exponents))


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in ``num_vars`` variables with a sparse term map.

    ``terms`` maps exponent tuples to nonzero coefficients; terms are stored
    in graded lexicographic order so that printing and hashing are stable.
    """

    num_vars: int
    terms: Mapping[Monomial, Scalar]
    mode: Mode = Mode.APPROX
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        cleaned: Dict[Monomial, Scalar] = {}
        for mono, coef in self.terms.items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.num_vars:
                raise ValueError(
                    f"exponent vector {mono} has length {len(mono)}, expected {self.num_vars}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = to_scalar(coef, self.mode)
            if c:
                prev = cleaned.get(mono)
                c = c if prev is None else prev + c
                if c:
                    cleaned[mono] = c
                else:
                    cleaned.pop(mono, None)
        ordered = dict(sorted(cleaned.items(), key=lambda kv: grlex_key(kv[0])))
        object.__setattr__(self, "terms", ordered)
        object.__setattr__(self, "_hash", hash((self.num_vars, self.mode,
                                                tuple(ordered.items()))))

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, mode: Mode = Mode.APPROX) -> "Polynomial":
        return cls(num_vars, {}, mode)

    @classmethod
    def constant(cls, c, num_vars: int, mode: Mode = Mode.APPROX) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: c}, mode)

    @classmethod
    def variable(cls, j: int, num_vars: int, mode: Mode = Mode.APPROX) -> "Polynomial":
        mono = tuple(1 if k == j else 0 for k in range(num_vars))
        return cls(num_vars, {mono: one(mode)}, mode)

    # basic properties -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def has_real_coefficients(self) -> bool:
        return all(is_real_scalar(c) for c in self.terms.values())

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.num_vars == other.num_vars and self.mode == other.mode
                and self.terms == other.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    # arithmetic -----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.num_vars != self.num_vars:
            raise ValueError("polynomials in different numbers of variables")
        if other.mode != self.mode:
            raise ModeMismatchError("polynomials over different coefficient rings")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.num_vars, self.mode)

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for m, c in o.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Polynomial(self.num_vars, terms, self.mode)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.num_vars, {m: -c for m, c in self.terms.items()}, self.mode)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms[m] + c1 * c2 if m in terms else c1 * c2
        return Polynomial(self.num_vars, terms, self.mode)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(one(self.mode), self.num_vars, self.mode)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = to_scalar(c, self.mode)
        return Polynomial(self.num_vars, {m: c * v for m, v in self.terms.items()}, self.mode)

    def diff(self, j: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``j``."""
        terms = {}
        for m, c in self.terms.items():
            e = m[j]
            if e:
                dm = m[:j] + (e - 1,) + m[j + 1:]
                terms[dm] = c * e
        return Polynomial(self.num_vars, terms, self.mode)

    def conjugate(self) -> "Polynomial":
        return Polynomial(self.num_vars, {m: c.conjugate() for m, c in self.terms.items()},
                          self.mode)

    def to_approx(self) -> "Polynomial":
        if self.mode is Mode.APPROX:
            return self
        return Polynomial(self.num_vars, {m: complex(c) for m, c in self.terms.items()},
                          Mode.APPROX)

    # evaluation -----------------------------------------------------------

    def evaluate(self, x: Sequence[Scalar]) -> Scalar:
        """Direct term-by-term evaluation (no shared subexpressions)."""
        if len(x) != self.num_vars:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.num_vars}")
        acc = zero(self.mode)
        for m, c in self.terms.items():
            t = c
            for xi, e in zip(x, m):
                if e:
                    t = t * xi ** e
            acc = acc + t
        return acc

    __call__ = evaluate

    # norms ------------------------------------------------------------------

    def bombieri_weyl_norm_sq(self, degree: int | None = None):
        """Squared Bombieri-Weyl norm, exact (Fraction) in exact mode.

        ``degree`` defaults to the polynomial's own total degree.
        """
        if not self.terms:
            return Fraction(0) if self.mode is Mode.EXACT else 0.0
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("homogenizing degree below the polynomial's degree")
        exact = self.mode is Mode.EXACT
        total = Fraction(0) if exact else 0.0
        d_fact = math.factorial(d)
        for m, c in self.terms.items():
            weight_num = math.prod(math.factorial(e) for e in m) * math.factorial(d - sum(m))
            if exact:
                total += Fraction(weight_num, d_fact) * abs2(c)
            else:
                total += (weight_num / d_fact) * abs2(c)
        return total

    def bombieri_weyl_norm(self, degree: int | None = None) -> float:
        return math.sqrt(float(self.bombieri_weyl_norm_sq(degree)))

    # printing ---------------------------------------------------------------

    def to_string(self, var_names: Sequence[str] | None = None) -> str:
        from .parse import format_polynomial
        return format_polynomial(self, var_names)

    def __str__(self):
        return self.to_string()


def bombieri_weyl_norm(f: Polynomial) -> float:
    """Bombieri-Weyl norm of ``f`` with respect to its own degree."""
    return f.bombieri_weyl_norm()


def monomials_of(polys: Iterable[Polynomial]) -> list:
    seen = set()
    for p in polys:
        seen.update(p.terms)
    return sorted(seen, key=grlex_key)
