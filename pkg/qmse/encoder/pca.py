import numpy as np
import scipy.linalg

from ..base.errors import DimensionMismatchError, RankError
from ..utils import check_numpy_array
from .fingerprint import Fingerprint


__all__ = (
    'PCAModel',
    'pca_fit',
    'pca_project',
    'pca_rank',
)


def _as_matrix(rows):
    X = np.stack([
        r.to_array() if isinstance(r, Fingerprint)
        else np.asarray(r, dtype='float') for r in rows])
    check_numpy_array(X, ndim=2)
    return X


def _singular_values_rank(s, shape):
    if s.size == 0 or s[0] == 0:
        return 0
    tol = s[0] * max(shape) * np.finfo('float').eps
    return int(np.sum(s > tol))


def pca_rank(rows):
    """ The rank of the centered data matrix. """
    X = _as_matrix(rows)
    s = scipy.linalg.svd(X - X.mean(axis=0), compute_uv=False)
    return _singular_values_rank(s, X.shape)


class PCAModel:
    """
    A fitted principal-component projection.

    Parameters
    ----------
    mean : 1d array, shape: [num_features]

        The training mean.

    components : 2d array, shape: [k, num_features]

        Orthonormal principal directions, strongest first.

    explained_variance : 1d array, shape: [k]

        Non-increasing variances along the components.

    per_feature_range : 2d array, shape: [k, 2]

        ``(min, max)`` of each projected coordinate over the training rows.
        These ranges are frozen and reused to scale unseen data.

    """
    def __init__(
            self, mean, components, explained_variance, per_feature_range):
        self.mean = np.asarray(mean, dtype='float')
        self.components = np.asarray(components, dtype='float')
        self.explained_variance = np.asarray(explained_variance, dtype='float')
        self.per_feature_range = np.asarray(per_feature_range, dtype='float')
        for arr in (self.mean, self.components, self.explained_variance,
                    self.per_feature_range):
            arr.setflags(write=False)

    @property
    def k(self):
        return self.components.shape[0]

    @property
    def num_features(self):
        return self.mean.size

    def __repr__(self):
        return "PCAModel(k={}, num_features={})".format(
            self.k, self.num_features)

    def project(self, rows):
        """
        Project a batch of rows.

        Returns
        -------
        coords : 2d array, shape: [num_rows, k]

        """
        X = _as_matrix(rows)
        if X.shape[1] != self.num_features:
            raise DimensionMismatchError(
                "expected rows with {} features, got: {}"
                .format(self.num_features, X.shape[1]))
        return (X - self.mean) @ self.components.T


def pca_fit(rows, k):
    """
    Fit a ``k``-component PCA by singular value decomposition of the centered
    data.

    Component signs are fixed so that the largest-magnitude loading of each
    component is positive, which makes the fit deterministic.

    Parameters
    ----------
    rows : list of Fingerprint or 1d arrays

        The training data.

    k : positive int

        Number of components.

    Returns
    -------
    model : PCAModel

    Raises
    ------
    RankError

        If ``k`` exceeds the rank of the centered data.

    """
    X = _as_matrix(rows)
    k = int(k)
    n_rows = X.shape[0]
    if k < 1:
        raise RankError("k must be at least 1, got: {}".format(k))
    if n_rows < k:
        raise RankError(
            "need at least k={} rows, got: {}".format(k, n_rows))

    mean = X.mean(axis=0)
    Xc = X - mean
    _, s, Vt = scipy.linalg.svd(Xc, full_matrices=False)
    rank = _singular_values_rank(s, X.shape)
    if k > rank:
        raise RankError(
            "k={} exceeds the rank {} of the centered data".format(k, rank))

    components = Vt[:k]
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(k), pivots])
    components = components * signs[:, None]

    explained_variance = s[:k] ** 2 / (n_rows - 1)
    coords = Xc @ components.T
    per_feature_range = np.stack(
        [coords.min(axis=0), coords.max(axis=0)], axis=1)
    return PCAModel(mean, components, explained_variance, per_feature_range)


def pca_project(model, fp):
    """
    Project a single fingerprint (or feature vector).

    Returns
    -------
    coords : 1d array, shape: [k]

    """
    return model.project([fp])[0]
