from .arith import (ONE, UNBOUNDED, ZERO, ComplexInterval, RealInterval, interval_add,
                    interval_mul, interval_pow, interval_sub, make_complex_interval,
                    parse_complex_interval)
from .krawczyk import (KrawczykOutcome, KrawczykResult, SingularJacobianError,
                       interval_extension_eval, interval_extension_jacobian, krawczyk_check,
                       krawczyk_operator, krawczyk_realness_test, krawczyk_test,
                       point_to_interval, point_to_interval_adaptive)
from .linalg import IntervalBox, IntervalMatrix, interval_matrix_mul, parse_box

__all__ = [
    "ONE", "UNBOUNDED", "ZERO", "ComplexInterval", "IntervalBox", "IntervalMatrix",
    "KrawczykOutcome", "KrawczykResult", "RealInterval", "SingularJacobianError",
    "interval_add", "interval_extension_eval", "interval_extension_jacobian",
    "interval_matrix_mul", "interval_mul", "interval_pow", "interval_sub", "krawczyk_check",
    "krawczyk_operator", "krawczyk_realness_test", "krawczyk_test", "make_complex_interval",
    "parse_box", "parse_complex_interval", "point_to_interval", "point_to_interval_adaptive",
]
