from collections import OrderedDict

import numpy as np

from ..base.errors import ConfigError, NumpyArrayCheckError


__all__ = (
    'LRUCache',
    'check_numpy_array',
    'derive_random_state',
    'median_and_band',
    'minmax_scale',
)


def _as_options(value):
    return tuple(value) if isinstance(value, (list, tuple, set)) else (value,)


def check_numpy_array(arr, ndim=None, axis_size=None, axis=None, kind=None):
    """
    Validate the layout of an amplitude or feature array before it is used.

    Parameters
    ----------
    arr : ndarray

        The array to check.

    ndim : int or tuple of ints, optional

        The allowed number(s) of dimensions.

    axis_size, axis : int or tuple of ints, int, optional

        The allowed size(s) of ``arr`` along ``axis``. Both must be given for
        this check to run.

    kind : str, optional

        Allowed numpy dtype kinds, e.g. ``'fc'`` for real or complex floats.

    Raises
    ------
    NumpyArrayCheckError

        If any of the requested checks fails.

    """
    if not isinstance(arr, np.ndarray):
        raise NumpyArrayCheckError(
            "expected a numpy array, got {}".format(type(arr).__name__))

    if ndim is not None and arr.ndim not in _as_options(ndim):
        raise NumpyArrayCheckError(
            "array has ndim={}, allowed: {}".format(arr.ndim, ndim))

    if kind is not None and arr.dtype.kind not in kind:
        raise NumpyArrayCheckError(
            "array has dtype {}, allowed kinds: {!r}".format(arr.dtype, kind))

    if axis_size is None or axis is None:
        return
    if arr.ndim <= axis or arr.shape[axis] not in _as_options(axis_size):
        raise NumpyArrayCheckError(
            "array of shape {} has the wrong size along axis {}, allowed: {}"
            .format(arr.shape, axis, axis_size))


def derive_random_state(seed, *keys):
    """
    Derive an independent random state from a base seed and a tuple of
    integer keys, e.g. ``(fold_index, restart_index)``.

    The same ``(seed, *keys)`` always yields the same stream, regardless of
    the order in which the streams are requested. This is what makes
    parallel restarts reproducible.

    Parameters
    ----------
    seed : int

        The base (64-bit) seed.

    \\*keys : ints

        Additional non-negative integer keys.

    Returns
    -------
    random_state : numpy.random.RandomState

        A freshly seeded random state.

    """
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(k) for k in keys]
    state = np.random.SeedSequence(entropy).generate_state(4)
    return np.random.RandomState(state)


def median_and_band(values, lower=16, upper=84):
    """
    Compute the median together with a percentile band.

    Parameters
    ----------
    values : array-like

        The values to aggregate. They are flattened first, so the result
        doesn't depend on the order in which restarts or folds finished.

    lower, upper : float, optional

        The percentiles of the band.

    Returns
    -------
    median, low, high : floats

    """
    values = np.sort(np.ravel(np.asarray(values, dtype='float')))
    if values.size == 0:
        return np.nan, np.nan, np.nan
    return (
        float(np.median(values)),
        float(np.percentile(values, lower)),
        float(np.percentile(values, upper)))


def minmax_scale(x, lo, hi, new_lo, new_hi, clip=True):
    """
    Linearly map ``x`` from ``[lo, hi]`` onto ``[new_lo, new_hi]``.

    If ``lo == hi`` the input range is degenerate and every value maps onto the
    midpoint of the new range.

    """
    x = np.asarray(x, dtype='float')
    lo = np.asarray(lo, dtype='float')
    hi = np.asarray(hi, dtype='float')
    width = hi - lo
    safe = np.where(width == 0, 1.0, width)
    frac = np.where(width == 0, 0.5, (x - lo) / safe)
    y = new_lo + frac * (new_hi - new_lo)
    if clip:
        y = np.clip(y, min(new_lo, new_hi), max(new_lo, new_hi))
    return y


class LRUCache:
    """
    A size-capped mapping that evicts the least recently used entry.

    Parameters
    ----------
    maxsize : positive int or None, optional

        The capacity. If None, the cache grows without bound.

    """
    def __init__(self, maxsize=1024):
        if maxsize is not None and int(maxsize) < 1:
            raise ConfigError("maxsize must be a positive int or None")
        self.maxsize = None if maxsize is None else int(maxsize)
        self._data = OrderedDict()

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def get(self, key, compute):
        """
        Look up ``key``, calling ``compute()`` to fill it on a miss.

        """
        if key in self._data:
            self._data.move_to_end(key)
            return self._data[key]
        value = compute()
        self._data[key] = value
        if self.maxsize is not None and len(self._data) > self.maxsize:
            self._data.popitem(last=False)
        return value

    def clear(self):
        self._data.clear()
