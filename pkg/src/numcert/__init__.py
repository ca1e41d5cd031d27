"""Certification of numerical solutions of square polynomial systems."""

from .alpha import (AlphaCertification, AlphaConstants, Distinctness, ExactBoundContext,
                    NonRealSystemError, Realness, alpha_theory_certification, certify_distinct,
                    certify_real, certify_regular, compute_constants)
from .certify import (CertificationReport, CertifyOptions, certify_solutions,
                      pairwise_distinct_intervals)
from .deflation import DeflationTrace, Strategy, certify_singular, deflate_once
from .interval import (ComplexInterval, IntervalBox, IntervalMatrix, krawczyk_check, krawczyk_operator,
                       krawczyk_realness_test, krawczyk_test, point_to_interval,
                       point_to_interval_adaptive)
from .poly import GaussianRational, Mode, Point, PolySystem, Polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "AlphaCertification", "AlphaConstants", "CertificationReport", "CertifyOptions",
    "ComplexInterval", "DeflationTrace", "Distinctness", "ExactBoundContext",
    "GaussianRational", "IntervalBox", "IntervalMatrix", "Mode", "NonRealSystemError", "Point",
    "PolySystem", "Polynomial", "Realness", "Strategy", "alpha_theory_certification",
    "certify_distinct", "certify_real", "certify_regular", "certify_singular",
    "certify_solutions", "compute_constants", "deflate_once", "krawczyk_check", "krawczyk_operator",
    "krawczyk_realness_test", "krawczyk_test", "pairwise_distinct_intervals",
    "parse_polynomial", "point_to_interval", "point_to_interval_adaptive", "__version__",
]
