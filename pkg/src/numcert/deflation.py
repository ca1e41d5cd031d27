"""Soft certification of singular solutions by iterated deflation.

At a singular point the system ``F`` is replaced by the square system
``F + F' B`` where ``B`` is a random unit vector drawn from the numerical
kernel of ``F'(x)``; this is repeated until regular certification succeeds.
The randomness makes the verdict a probability-one statement, not a proof.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .alpha import certify_regular
from .interval.krawczyk import krawczyk_test
from .poly.system import Point, PolySystem, evaluate, evaluate_jacobian

# relative; must exceed sigma_min/sigma_max at deflated levels, which scales with
# the distance from x to the singular root
DEFAULT_KERNEL_TOL = 1e-4
DEFAULT_MAX_ITERATIONS = 10


class Strategy(str, enum.Enum):
    ALPHA_THEORY = "alphaTheory"
    INTERVAL_ARITHMETIC = "intervalArithmetic"

    @classmethod
    def parse(cls, value) -> "Strategy":
        if isinstance(value, Strategy):
            return value
        aliases = {"alpha": cls.ALPHA_THEORY, "interval": cls.INTERVAL_ARITHMETIC}
        return aliases.get(value) or cls(value)


class RegularPointError(ValueError):
    """Deflation was requested at a point whose Jacobian has a trivial kernel."""


@dataclass(frozen=True)
class KernelBasis:
    basis: np.ndarray  # n x kappa, orthonormal columns
    kernel_dim: int
    tol: float
    singular_values: np.ndarray


def numerical_kernel(M, tol: float = DEFAULT_KERNEL_TOL) -> KernelBasis:
    """Right singular vectors whose singular values fall below ``tol * sigma_max``.

    When ``sigma_max < tol`` the threshold is absolute (``tol`` itself).
    """
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    _, s, vh = np.linalg.svd(M)
    n = M.shape[1]
    sigma = np.zeros(n)
    sigma[:len(s)] = s
    smax = sigma.max(initial=0.0)
    cutoff = tol * smax if smax >= tol else tol
    mask = sigma < cutoff
    basis = vh.conj().T[:, mask]
    return KernelBasis(basis, int(mask.sum()), tol, s)


@dataclass(frozen=True)
class DeflationStep:
    B: np.ndarray
    deflated: PolySystem
    parent: PolySystem
    kernel_dim: int
    seed: int


def deflated_system(F: PolySystem, B) -> PolySystem:
    """``{f_i + sum_j (d f_i / d x_j) b_j}`` as a square system."""
    Fa = F.to_approx()
    b = [complex(v) for v in B]
    polys = []
    for f, row in zip(Fa.polys, Fa.jacobian):
        g = f
        for dfdx, bj in zip(row, b):
            if bj != 0:
                g = g + dfdx.scale(bj)
        polys.append(g)
    return PolySystem(polys, Fa.var_names)


def deflate_once(F: PolySystem, x, rng_seed: int, tol: float = DEFAULT_KERNEL_TOL) -> DeflationStep:
    """One deflation step with a seeded random kernel direction."""
    Fa = F.to_approx()
    x = Fa.check_point(Point.coerce(x).to_approx())
    kb = numerical_kernel(np.array(evaluate_jacobian(Fa, x), dtype=complex), tol)
    if kb.kernel_dim == 0:
        raise RegularPointError("point is numerically regular; deflation is unnecessary")
    rng = np.random.default_rng(rng_seed)
    coeffs = rng.standard_normal(kb.kernel_dim) + 1j * rng.standard_normal(kb.kernel_dim)
    B = kb.basis @ coeffs
    B = B / np.linalg.norm(B)
    return DeflationStep(B, deflated_system(Fa, B), F, kb.kernel_dim, int(rng_seed))


@dataclass
class LevelRecord:
    level: int
    seed: Optional[int]
    B: Optional[np.ndarray]
    kernel_dim: Optional[int]
    certified: bool


@dataclass
class DeflationTrace:
    steps: List[DeflationStep] = field(default_factory=list)
    levels: List[LevelRecord] = field(default_factory=list)
    verdict: bool = False
    iterations_used: int = 0
    reason: str = ""
    soft: bool = True

    @property
    def final_system(self) -> Optional[PolySystem]:
        return self.steps[-1].deflated if self.steps else None

    def to_dict(self) -> dict:
        levels = []
        for rec in self.levels:
            levels.append({
                "level": rec.level,
                "seed": rec.seed,
                "B": None if rec.B is None else [[float(v.real), float(v.imag)] for v in rec.B],
                "kernelDim": rec.kernel_dim,
                "certified": rec.certified,
            })
        return {"verdict": self.verdict, "soft": self.soft, "iterationsUsed": self.iterations_used,
                "reason": self.reason, "levels": levels}


def level_seed(rng_seed: int, level: int) -> int:
    return int(np.random.SeedSequence([int(rng_seed), level]).generate_state(1)[0])


def default_residual_tol(F: PolySystem, x: Point) -> float:
    norm = math.sqrt(float(x.to_approx().norm_sq()))
    return 1e-4 * (1.0 + norm) ** F.max_degree


def residual(F: PolySystem, x) -> float:
    vals = evaluate(F.to_approx(), Point.coerce(x).to_approx())
    return max((abs(complex(v)) for v in vals), default=0.0)


def _certify_level(G: PolySystem, x: Point, strategy: Strategy, inflation: float) -> bool:
    if strategy is Strategy.ALPHA_THEORY:
        return certify_regular(G, x)
    return krawczyk_test(G, x, inflation=inflation)


def certify_singular(F: PolySystem, x, strategy=Strategy.ALPHA_THEORY,
                     iterations: Optional[int] = None,
                     max_iterations: int = DEFAULT_MAX_ITERATIONS, rng_seed: int = 0,
                     residual_tol: Optional[float] = None,
                     kernel_tol: float = DEFAULT_KERNEL_TOL,
                     inflation: float = 4.0) -> tuple:
    """Soft certification of a (possibly) singular solution.

    Returns ``(verdict, trace)``.  With ``iterations=k`` the system is deflated
    exactly ``k`` times and then certified once; otherwise certification is
    tried at every level, deflating in between, up to ``max_iterations``.
    """
    strategy = Strategy.parse(strategy)
    if iterations is not None and iterations < 1:
        raise ValueError("iterations must be a positive integer")
    if max_iterations < 1:
        raise ValueError("max_iterations must be a positive integer")
    Fa = F.to_approx()
    x = Fa.check_point(Point.coerce(x).to_approx())
    trace = DeflationTrace()
    tol = default_residual_tol(Fa, x) if residual_tol is None else residual_tol
    if not x.is_finite() or not residual(Fa, x) <= tol:
        trace.reason = "residual above tolerance"
        return False, trace

    current = Fa
    if iterations is None:
        for level in range(max_iterations + 1):
            ok = _certify_level(current, x, strategy, inflation)
            if ok:
                trace.levels.append(LevelRecord(level, None, None, None, True))
                trace.verdict = True
                return True, trace
            if level == max_iterations:
                trace.levels.append(LevelRecord(level, None, None, None, False))
                trace.reason = "max_iterations exhausted"
                return False, trace
            seed = level_seed(rng_seed, level)
            try:
                step = deflate_once(current, x, seed, kernel_tol)
            except RegularPointError:
                trace.levels.append(LevelRecord(level, seed, None, 0, False))
                trace.reason = "numerically regular but not certified"
                return False, trace
            trace.levels.append(LevelRecord(level, seed, step.B, step.kernel_dim, False))
            trace.steps.append(step)
            trace.iterations_used += 1
            current = step.deflated
        raise AssertionError("unreachable")

    for level in range(iterations):
        seed = level_seed(rng_seed, level)
        try:
            step = deflate_once(current, x, seed, kernel_tol)
        except RegularPointError:
            trace.levels.append(LevelRecord(level, seed, None, 0, False))
            trace.reason = f"regular at level {level}, before {iterations} deflations"
            return False, trace
        trace.levels.append(LevelRecord(level, seed, step.B, step.kernel_dim, False))
        trace.steps.append(step)
        trace.iterations_used += 1
        current = step.deflated
    ok = _certify_level(current, x, strategy, inflation)
    trace.levels.append(LevelRecord(iterations, None, None, None, ok))
    trace.verdict = ok
    if not ok:
        trace.reason = f"not regular after {iterations} deflations"
    return ok, trace
