import numpy as np
import pytest

from ..base.errors import DimensionMismatchError, NonFiniteObjectiveError
from .optimizer import minimize, select_engine


def rosenbrock(x):
    return (1 - x[0]) ** 2 + 100 * (x[1] - x[0] ** 2) ** 2


def test_quadratic():
    x, fun, trace = minimize(lambda x: (x[0] - 1) ** 2, [0.0])
    assert x[0] == pytest.approx(1, abs=1e-4)
    assert fun < 1e-8
    assert trace[-1] == fun


def test_rosenbrock():
    x, fun, trace = minimize(rosenbrock, [-1.2, 1.0], max_iters=2000)
    assert fun < 1e-3
    assert len(trace) <= 2000


def test_small_budget_uses_linear_models():
    assert select_engine(2, 5) == 'COBYLA'
    assert select_engine(2, 6) == 'COBYQA'
    x, fun, trace = minimize(rosenbrock, [-1.2, 1.0], max_iters=5)
    assert len(trace) <= 5
    assert fun <= rosenbrock([-1.2, 1.0])


def test_budget_is_never_exceeded():
    for max_iters in (2, 3, 7):
        _, _, trace = minimize(
            lambda x: float(np.sum(x ** 2)), np.ones(6), max_iters=max_iters)
        assert 1 <= len(trace) <= max_iters


def test_constant_objective():
    x0 = np.array([0.3, -0.7])
    x, fun, trace = minimize(lambda x: 2.5, x0, max_iters=50)
    np.testing.assert_array_equal(x, x0)
    assert fun == 2.5
    assert np.all(trace == 2.5)


def test_trace_is_best_so_far():
    f0 = rosenbrock([-1.2, 1.0])
    _, fun, trace = minimize(rosenbrock, [-1.2, 1.0], max_iters=300)
    assert trace[0] == f0
    assert np.all(np.diff(trace) <= 0)
    assert fun <= f0
    assert 1 < len(trace) <= 300


def test_single_evaluation_budget():
    x, fun, trace = minimize(rosenbrock, [0.5, 0.5], max_iters=1)
    np.testing.assert_array_equal(x, [0.5, 0.5])
    assert len(trace) == 1


def test_deterministic():
    a = minimize(rosenbrock, [-1.2, 1.0], max_iters=200)
    b = minimize(rosenbrock, [-1.2, 1.0], max_iters=200)
    np.testing.assert_array_equal(a[0], b[0])
    np.testing.assert_array_equal(a[2], b[2])


def test_non_finite():
    def f(x):
        return np.nan if x[0] > 0.5 else (x[0] - 2) ** 2

    with pytest.raises(NonFiniteObjectiveError, match='nan'):
        minimize(f, [0.0])


def test_empty_x0():
    with pytest.raises(DimensionMismatchError):
        minimize(lambda x: 0.0, [])
