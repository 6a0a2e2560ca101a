import numpy as np
import pytest

from ..base.errors import ConfigError, NumpyArrayCheckError
from .helpers import (
    LRUCache, check_numpy_array, derive_random_state, median_and_band,
    minmax_scale)


class TestCheckNumpyArray:
    def test_passes(self):
        check_numpy_array(np.zeros((2, 4)), ndim=2, axis_size=4, axis=1)
        check_numpy_array(np.zeros(3), ndim=(1, 2), kind='f')

    def test_not_an_array(self):
        with pytest.raises(NumpyArrayCheckError, match='list'):
            check_numpy_array([1, 2])

    def test_ndim(self):
        with pytest.raises(NumpyArrayCheckError, match='ndim=1'):
            check_numpy_array(np.zeros(3), ndim=2)

    def test_axis_size(self):
        with pytest.raises(NumpyArrayCheckError, match='axis 1'):
            check_numpy_array(np.zeros((2, 3)), axis_size=4, axis=1)
        with pytest.raises(NumpyArrayCheckError):
            check_numpy_array(np.zeros(3), axis_size=3, axis=1)

    def test_kind(self):
        with pytest.raises(NumpyArrayCheckError, match='kinds'):
            check_numpy_array(np.zeros(3, dtype=int), kind='fc')


def test_derive_random_state():
    a = derive_random_state(7, 1, 2).uniform(size=5)
    b = derive_random_state(7, 1, 2).uniform(size=5)
    c = derive_random_state(7, 2, 1).uniform(size=5)
    np.testing.assert_array_equal(a, b)
    assert not np.allclose(a, c)


def test_median_and_band():
    m, lo, hi = median_and_band([3, 1, 2, 5, 4])
    assert m == 3
    assert lo < m < hi
    assert all(np.isnan(median_and_band([])))


def test_minmax_scale():
    np.testing.assert_allclose(
        minmax_scale([0, 5, 10, 20], 0, 10, -1, 1), [-1, 0, 1, 1])
    np.testing.assert_allclose(
        minmax_scale([2, 2], [2, 2], [2, 2], 0, np.pi), [np.pi / 2] * 2)


class TestLRUCache:
    def test_evicts_least_recently_used(self):
        cache = LRUCache(2)
        calls = []

        def compute(key):
            return lambda: calls.append(key) or key * 10

        assert cache.get(1, compute(1)) == 10
        assert cache.get(2, compute(2)) == 20
        assert cache.get(1, compute(1)) == 10
        cache.get(3, compute(3))
        assert len(cache) == 2
        assert 1 in cache and 3 in cache and 2 not in cache
        assert calls == [1, 2, 3]

    def test_unbounded(self):
        cache = LRUCache(None)
        for i in range(100):
            cache.get(i, lambda: i)
        assert len(cache) == 100
        cache.clear()
        assert len(cache) == 0

    def test_bad_size(self):
        with pytest.raises(ConfigError):
            LRUCache(0)
