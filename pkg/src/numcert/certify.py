"""End-to-end certification of a list of numerical solutions."""

from __future__ import annotations

import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .alpha import (AlphaConstants, ExactBoundContext, Realness, compute_constants, is_regular,
                    realness_from_constants, select_distinct)
from .deflation import (DEFAULT_KERNEL_TOL, DeflationTrace, Strategy, certify_singular,
                        default_residual_tol, residual)
from .interval.krawczyk import krawczyk_check
from .interval.linalg import IntervalBox
from .poly.system import Point, PolySystem, newton_operator


@dataclass
class CertifyOptions:
    strategy: Strategy = Strategy.ALPHA_THEORY
    rng_seed: int = 0
    max_deflation_iterations: int = 10
    residual_tol: Optional[float] = None  # None: 1e-4 (1 + ||x||)^d per point
    inflation: float = 4.0
    radius_min: Optional[float] = None
    refinement_steps: int = 0
    compat_boolean_output: bool = False
    sqrt_slack: Fraction = Fraction(1, 10**6)
    kernel_tol: float = DEFAULT_KERNEL_TOL
    workers: int = 1

    def __post_init__(self):
        self.strategy = Strategy.parse(self.strategy)
        if self.max_deflation_iterations < 1:
            raise ValueError("max_deflation_iterations must be positive")
        if self.residual_tol is not None and not self.residual_tol > 0:
            raise ValueError("residual_tol must be positive")
        if not self.inflation > 0:
            raise ValueError("inflation must be positive")
        if self.radius_min is not None and not self.radius_min > 0:
            raise ValueError("radius_min must be positive")
        if self.refinement_steps < 0:
            raise ValueError("refinement_steps must be nonnegative")
        if not self.kernel_tol > 0:
            raise ValueError("kernel_tol must be positive")
        self.sqrt_slack = Fraction(self.sqrt_slack)
        if self.sqrt_slack <= 0:
            raise ValueError("sqrt_slack must be positive")


@dataclass
class PointOutcome:
    point: Point
    status: str  # "regular" | "singular" | "nonCertified"
    constants: Optional[AlphaConstants] = None
    box: Optional[IntervalBox] = None
    K: Optional[IntervalBox] = None
    real: Optional[bool] = None
    trace: Optional[DeflationTrace] = None
    error: str = ""


@dataclass
class CertificationReport:
    """Verdict lists hold indices into the input solution list."""

    strategy: Strategy
    points: List[Point]
    alpha_values: List = field(default_factory=list)
    constants: List[Optional[AlphaConstants]] = field(default_factory=list)
    certified_regular: List[int] = field(default_factory=list)
    certified_singular: List[int] = field(default_factory=list)
    certified_distinct: List[int] = field(default_factory=list)
    certified_real: List[int] = field(default_factory=list)
    non_certified: List[int] = field(default_factory=list)
    krawczyk_operators: Dict[int, IntervalBox] = field(default_factory=dict)
    boxes: Dict[int, IntervalBox] = field(default_factory=dict)
    traces: Dict[int, DeflationTrace] = field(default_factory=dict)
    evidence: Dict[int, str] = field(default_factory=dict)

    @property
    def certified(self) -> List[int]:
        return sorted(self.certified_regular + self.certified_singular)


def pairwise_distinct_intervals(boxes: Sequence[IntervalBox]) -> List[Tuple[int, int]]:
    """Index pairs whose (certified) boxes are disjoint, hence hold distinct roots."""
    pairs = []
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if boxes[i].is_disjoint(boxes[j]):
                pairs.append((i, j))
    return pairs


def _point_seed(rng_seed: int, x: Point) -> int:
    # order-independent: derived from the coordinates, not the list position
    return (int(rng_seed) * 1_000_003 + zlib.crc32(repr(x.coords).encode())) % (2**32)


def _refine(F: PolySystem, x: Point, steps: int) -> Point:
    for _ in range(steps):
        nxt, singular = newton_operator(F, x)
        if singular or not nxt.is_finite():
            break
        x = nxt
    return x


def _certify_point(F: PolySystem, x: Point, opts: CertifyOptions) -> PointOutcome:
    x = _refine(F, x, opts.refinement_steps)
    out = PointOutcome(x, "nonCertified")
    if not x.is_finite():
        out.error = "non-finite coordinates"
        return out
    strategy = opts.strategy
    if strategy is Strategy.ALPHA_THEORY:
        c = compute_constants(F, x, ExactBoundContext(opts.sqrt_slack))
        out.constants = c
        if is_regular(c):
            out.status = "regular"
            return out
    else:
        chk = krawczyk_check(F, x, inflation=opts.inflation, radius_min=opts.radius_min)
        out.box = chk.box
        if chk.passed:
            out.status = "regular"
            out.K = chk.K
            return out
        out.error = chk.diagnostic
    tol = opts.residual_tol if opts.residual_tol is not None else default_residual_tol(F, x)
    if residual(F, x) > tol:
        out.error = out.error or "residual above tolerance"
        return out
    ok, trace = certify_singular(F, x, strategy, max_iterations=opts.max_deflation_iterations,
                                 rng_seed=_point_seed(opts.rng_seed, x), residual_tol=tol,
                                 kernel_tol=opts.kernel_tol, inflation=opts.inflation)
    out.trace = trace
    if ok:
        out.status = "singular"
        out.error = ""
        if strategy is Strategy.INTERVAL_ARITHMETIC:
            final = trace.final_system or F
            chk = krawczyk_check(final, x, inflation=opts.inflation, radius_min=opts.radius_min)
            out.box, out.K = chk.box, chk.K
    else:
        out.error = trace.reason or out.error
    return out


def _safe_certify_point(F, x, opts) -> PointOutcome:
    try:
        return _certify_point(F, x, opts)
    except (ArithmeticError, ValueError, OverflowError) as exc:
        return PointOutcome(x, "nonCertified", error=f"{type(exc).__name__}: {exc}")


def certify_solutions(F: PolySystem, sols: Sequence, options: CertifyOptions | None = None
                      ) -> CertificationReport:
    """Certify every point of ``sols``; per-point failures never abort the batch."""
    opts = options or CertifyOptions()
    points = [F.check_point(x) for x in sols]
    if opts.workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(opts.workers) as pool:
            outcomes = list(pool.map(lambda p: _safe_certify_point(F, p, opts), points))
    else:
        outcomes = [_safe_certify_point(F, p, opts) for p in points]

    report = CertificationReport(opts.strategy, [o.point for o in outcomes])
    for i, o in enumerate(outcomes):
        if opts.strategy is Strategy.ALPHA_THEORY:
            report.alpha_values.append(o.constants.alpha if o.constants else math.inf)
            report.constants.append(o.constants)
        if o.box is not None:
            report.boxes[i] = o.box
        if o.trace is not None:
            report.traces[i] = o.trace
        if o.status == "regular":
            report.certified_regular.append(i)
        elif o.status == "singular":
            report.certified_singular.append(i)
        else:
            report.non_certified.append(i)
            if o.constants is not None:
                report.evidence[i] = f"alpha = {o.constants.alpha}"
            if o.error:
                report.evidence[i] = (report.evidence[i] + "; " if i in report.evidence else "") + o.error
        if o.K is not None and o.status != "nonCertified":
            report.krawczyk_operators[i] = o.K

    real_system = F.has_real_coefficients()
    if opts.strategy is Strategy.ALPHA_THEORY:
        consts = [o.constants for o in outcomes]
        report.certified_distinct = select_distinct(report.points, consts, report.certified_regular)
        if real_system:
            report.certified_real = [i for i in report.certified_distinct
                                     if realness_from_constants(report.points[i], consts[i])
                                     is Realness.REAL]
    else:
        kept: List[int] = []
        for i in report.certified_regular:
            if all(report.boxes[i].is_disjoint(report.boxes[j]) for j in kept):
                kept.append(i)
        report.certified_distinct = kept
        if real_system:
            report.certified_real = [
                i for i in report.certified_regular
                if krawczyk_check(F, report.boxes[i], realness=True).real]
    return report
