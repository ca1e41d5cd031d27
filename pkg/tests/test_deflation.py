import numpy as np
import pytest

from oracles import CUSP_POINT, LINK_ROOT_A

from numcert.deflation import (RegularPointError, Strategy, certify_singular, deflate_once,
                               deflated_system, level_seed, numerical_kernel)
from numcert.poly import PolySystem, evaluate_jacobian


def test_numerical_kernel_rank():
    kb = numerical_kernel([[0, 1], [0, 0]])
    assert kb.kernel_dim == 1
    assert np.allclose(np.abs(kb.basis[:, 0]), [1, 0])
    assert numerical_kernel(np.eye(3)).kernel_dim == 0
    assert numerical_kernel(np.zeros((2, 2))).kernel_dim == 2


def test_deflated_system_shape(cusp):
    G = deflated_system(cusp, [1, 0])
    assert G.num_vars == 2 and len(G.polys) == 2
    # x^2 + y + 2x,  x^3 - y^2 + 3x^2
    assert G == PolySystem.from_strings(["x^2 + y + 2*x", "x^3 - y^2 + 3*x^2"], ["x", "y"])


def test_deflate_once_is_seeded(cusp):
    a = deflate_once(cusp, CUSP_POINT, 5)
    b = deflate_once(cusp, CUSP_POINT, 5)
    assert np.array_equal(a.B, b.B)
    assert np.isclose(np.linalg.norm(a.B), 1)
    J = np.array(evaluate_jacobian(cusp, CUSP_POINT))
    assert np.linalg.norm(J @ a.B) < 1e-4


def test_deflate_regular_point_refuses(link):
    with pytest.raises(RegularPointError):
        deflate_once(link, LINK_ROOT_A, 0)


@pytest.mark.parametrize("strategy", list(Strategy))
def test_cusp_fixture_verdicts(cusp, strategy):
    ok, trace = certify_singular(cusp, CUSP_POINT, strategy)
    assert ok and trace.iterations_used == 2 and trace.soft
    assert certify_singular(cusp, CUSP_POINT, strategy, iterations=1)[0] is False
    assert certify_singular(cusp, CUSP_POINT, strategy, iterations=2)[0] is True
    assert certify_singular(cusp, CUSP_POINT, strategy, iterations=3)[0] is False


@pytest.mark.parametrize("strategy", list(Strategy))
def test_cusp_stable_across_seeds(cusp, strategy):
    wins = sum(certify_singular(cusp, CUSP_POINT, strategy, iterations=2, rng_seed=s)[0]
               for s in range(50))
    assert wins >= 49


def test_trace_records_levels(cusp):
    ok, trace = certify_singular(cusp, CUSP_POINT, rng_seed=3)
    d = trace.to_dict()
    assert d["verdict"] and d["iterationsUsed"] == 2
    seeds = [lv["seed"] for lv in d["levels"] if lv["seed"] is not None]
    assert seeds == [level_seed(3, 0), level_seed(3, 1)]
    assert [lv["kernelDim"] for lv in d["levels"][:2]] == [1, 1]
    assert d["levels"][-1]["certified"]


def test_trace_reproducible(cusp):
    a = certify_singular(cusp, CUSP_POINT, rng_seed=11)[1].to_dict()
    b = certify_singular(cusp, CUSP_POINT, rng_seed=11)[1].to_dict()
    assert a == b


def test_residual_gate(cusp):
    ok, trace = certify_singular(cusp, (0.5, 0.5))
    assert not ok and "residual" in trace.reason


def test_max_iterations_exhausted(cusp):
    ok, trace = certify_singular(cusp, CUSP_POINT, max_iterations=1)
    assert not ok and "max_iterations" in trace.reason


def test_bad_counts(cusp):
    with pytest.raises(ValueError):
        certify_singular(cusp, CUSP_POINT, iterations=0)
    with pytest.raises(ValueError):
        certify_singular(cusp, CUSP_POINT, max_iterations=0)


def test_regular_point_needs_no_deflation(link):
    ok, trace = certify_singular(link, LINK_ROOT_A)
    assert ok and trace.iterations_used == 0


def test_strategy_aliases():
    assert Strategy.parse("alpha") is Strategy.ALPHA_THEORY
    assert Strategy.parse("intervalArithmetic") is Strategy.INTERVAL_ARITHMETIC
    with pytest.raises(ValueError):
        Strategy.parse("alphaCertified")
