"""Straight-line evaluation of a system together with its Jacobian.

The schedule shares one power table per variable across every polynomial and
every Jacobian entry, then accumulates coefficient * monomial products.  It is
compiled once per system and is reusable for any point of matching mode.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .polynomial import Polynomial, monomials_of
from .scalar import one, zero


class EvalProgram:
    def __init__(self, polys: Sequence[Polynomial], jacobian: Sequence[Sequence[Polynomial]] = ()):
        if not polys:
            raise ValueError("empty system")
        self.num_vars = polys[0].num_vars
        self.mode = polys[0].mode
        outputs = list(polys) + [p for row in jacobian for p in row]
        self.num_values = len(polys)
        self.jac_shape = (len(jacobian), len(jacobian[0]) if jacobian else 0)
        self.monomials = monomials_of(outputs)
        index = {m: k for k, m in enumerate(self.monomials)}
        self.max_power = [max((m[j] for m in self.monomials), default=0)
                          for j in range(self.num_vars)]
        # each monomial as a list of (variable, exponent) factors with e >= 1
        self.factors: List[List[Tuple[int, int]]] = [
            [(j, e) for j, e in enumerate(m) if e] for m in self.monomials]
        self.rows: List[List[Tuple[int, object]]] = [
            [(index[m], c) for m, c in p.terms.items()] for p in outputs]

    def _monomial_values(self, x):
        table = []
        for j in range(self.num_vars):
            powers = [one(self.mode), x[j]]
            for _ in range(2, self.max_power[j] + 1):
                powers.append(powers[-1] * x[j])
            table.append(powers)
        values = []
        for fac in self.factors:
            if not fac:
                values.append(one(self.mode))
                continue
            j, e = fac[0]
            v = table[j][e]
            for j, e in fac[1:]:
                v = v * table[j][e]
            values.append(v)
        return values

    def run(self, x: Sequence):
        """Return ``(values, jacobian)``; jacobian is a list of rows (possibly empty)."""
        if len(x) != self.num_vars:
            raise ValueError(f"point has {len(x)} coordinates, expected {self.num_vars}")
        mono = self._monomial_values(x)
        out = []
        for row in self.rows:
            acc = zero(self.mode)
            for k, c in row:
                acc = acc + c * mono[k]
            out.append(acc)
        vals = out[:self.num_values]
        r, c = self.jac_shape
        flat = out[self.num_values:]
        jac = [flat[i * c:(i + 1) * c] for i in range(r)]
        return vals, jac
