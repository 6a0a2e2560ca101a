import numpy as np
import pytest

from ..base.errors import InsufficientStratumError
from .folds import quantile_bins, stratified_kfold


def check_partition(splits, n):
    tests = np.concatenate([test for _, test in splits])
    np.testing.assert_array_equal(np.sort(tests), np.arange(n))
    for train, test in splits:
        assert not set(train) & set(test)
        assert len(train) + len(test) == n


class TestStratifiedKFold:
    def test_equal_folds(self):
        y = np.array([1] * 45 + [0] * 60)
        splits = stratified_kfold(y, 5, seed=13)
        check_partition(splits, 105)
        for train, test in splits:
            assert len(test) == 21
            assert y[test].sum() == 9

    def test_deterministic(self):
        y = np.arange(20) % 2
        a = stratified_kfold(y, 4, seed=3)
        b = stratified_kfold(y, 4, seed=3)
        for (tr_a, te_a), (tr_b, te_b) in zip(a, b):
            np.testing.assert_array_equal(tr_a, tr_b)
            np.testing.assert_array_equal(te_a, te_b)

    def test_seed_changes_splits(self):
        y = np.arange(40) % 2
        a = stratified_kfold(y, 4, seed=0)
        b = stratified_kfold(y, 4, seed=1)
        assert any(
            not np.array_equal(ta, tb) for (_, ta), (_, tb) in zip(a, b))

    def test_continuous(self):
        y = np.linspace(100, 400, 30)
        splits = stratified_kfold(y, 3, seed=0, continuous=True)
        check_partition(splits, 30)
        for _, test in splits:
            assert len(test) == 10
            assert y[test].min() < 200 and y[test].max() > 300

    def test_small_stratum_warns(self, caplog):
        y = np.array([0] * 10 + [1] * 3)
        splits = stratified_kfold(y, 5, seed=0)
        check_partition(splits, 13)
        assert 'fewer than 5' in caplog.text

    def test_too_few_samples(self):
        with pytest.raises(InsufficientStratumError):
            stratified_kfold([0, 1, 0], 5)

    def test_no_full_stratum(self):
        with pytest.raises(InsufficientStratumError):
            stratified_kfold([0, 0, 1, 1, 2, 2], 3)

    def test_k_too_small(self):
        with pytest.raises(InsufficientStratumError):
            stratified_kfold([0, 1, 0, 1], 1)


def test_quantile_bins():
    bins = quantile_bins([5.0, 1.0, 3.0, 2.0, 4.0, 6.0], 2)
    np.testing.assert_array_equal(bins, [1, 0, 0, 0, 1, 1])


def test_quantile_bins_ties():
    bins = quantile_bins(np.ones(9), 3)
    np.testing.assert_array_equal(np.bincount(bins), [3, 3, 3])
