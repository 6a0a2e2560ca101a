import logging

import numpy as np
import pandas as pd
from sklearn.model_selection import StratifiedKFold

from ..base.errors import InsufficientStratumError
from ..utils import derive_random_state


__all__ = (
    'quantile_bins',
    'stratified_kfold',
)


def quantile_bins(targets, k):
    """
    Assign continuous targets to quantile bins for stratification.

    At most ``k`` bins are used, and fewer if that is needed to keep at
    least ``k`` targets per bin. Ties are broken by position.

    """
    targets = np.asarray(targets, dtype='float').ravel()
    n_bins = max(1, min(int(k), targets.size // int(k)))
    ranks = pd.Series(targets).rank(method='first').values
    return pd.qcut(ranks, n_bins, labels=False).astype('int')


def stratified_kfold(y, k=5, seed=0, continuous=False):
    """
    Stratified k-fold splits.

    Parameters
    ----------
    y : 1d array

        Class labels, or real-valued targets if ``continuous=True``.

    k : int, optional

        Number of folds, at least 2.

    seed : int, optional

        Base seed. The same seed gives the same splits.

    continuous : bool, optional

        Stratify by target quantile bins instead of by class.

    Returns
    -------
    splits : list of (1d array, 1d array)

        The sorted ``(train_index, test_index)`` of each fold. The test sets
        are disjoint, cover every sample and differ in size by at most one.

    Raises
    ------
    InsufficientStratumError

        If there are fewer samples than folds, or no stratum can fill every
        fold.

    """
    logger = logging.getLogger('stratified_kfold')
    y = np.asarray(y).ravel()
    k = int(k)
    if k < 2:
        raise InsufficientStratumError(
            "k must be at least 2, got: {}".format(k))
    if y.size < k:
        raise InsufficientStratumError(
            "cannot split {} samples into {} folds".format(y.size, k))

    strata = quantile_bins(y, k) if continuous else y
    values, counts = np.unique(strata, return_counts=True)
    if counts.max() < k:
        raise InsufficientStratumError(
            "every stratum has fewer than {} members: {}"
            .format(k, dict(zip(values.tolist(), counts.tolist()))))
    small = {v: c for v, c in zip(values.tolist(), counts.tolist()) if c < k}
    if small:
        logger.warning(
            "strata with fewer than %d members can't appear in every fold: %s",
            k, small)

    skf = StratifiedKFold(
        n_splits=k, shuffle=True, random_state=derive_random_state(seed))
    return [
        (np.sort(train), np.sort(test))
        for train, test in skf.split(np.zeros((y.size, 1)), strata)]
