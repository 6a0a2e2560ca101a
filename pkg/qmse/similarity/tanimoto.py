import numpy as np

from ..base.errors import DimensionMismatchError
from ..encoder import Fingerprint, topological_fingerprint
from ..encoder.structure import as_graph
from .matrix import SimilarityKind, SimilarityMatrix


__all__ = (
    'tanimoto',
    'tanimoto_matrix',
)


def _bits(fp):
    if isinstance(fp, Fingerprint):
        return fp.bits
    return np.asarray(fp, dtype='bool').ravel()


def tanimoto(a, b):
    """
    The Tanimoto coefficient of two binary fingerprints,

    .. math::

        T(a, b)\\ =\\ \\frac{|a\\wedge b|}{|a| + |b| - |a\\wedge b|}

    Two all-zero fingerprints are identical objects and get :math:`T=1`.

    Parameters
    ----------
    a, b : Fingerprint or 1d array of bool

        Fingerprints of equal length.

    Returns
    -------
    similarity : float between 0 and 1

    """
    a, b = _bits(a), _bits(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(
            "fingerprint lengths differ: {} and {}".format(a.size, b.size))
    both = int(np.count_nonzero(a & b))
    union = int(np.count_nonzero(a)) + int(np.count_nonzero(b)) - both
    if union == 0:
        return 1.0
    return both / union


def tanimoto_matrix(molecules, nbits=2048, max_path=7, labels=None):
    """
    Pairwise Tanimoto similarities of path fingerprints.

    Parameters
    ----------
    molecules : list of MolGraph or str

        The molecules (SMILES strings are parsed).

    nbits : power of two, optional

        Fingerprint length.

    max_path : positive int, optional

        Fingerprint path length.

    labels : list of str, optional

        Row names. Defaults to each molecule's SMILES.

    Returns
    -------
    matrix : SimilarityMatrix

    """
    graphs = [as_graph(m) for m in molecules]
    labels = _default_labels(graphs, labels)
    bits = np.stack([
        topological_fingerprint(g, nbits, max_path).bits for g in graphs])
    n = len(graphs)
    values = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            values[i, j] = values[j, i] = tanimoto(bits[i], bits[j])
    return SimilarityMatrix(
        labels, values, SimilarityKind.TANIMOTO,
        metadata={'nbits': int(nbits), 'max_path': int(max_path)})


def _default_labels(graphs, labels):
    if labels is None:
        return [g.source or 'M{}'.format(i) for i, g in enumerate(graphs)]
    labels = list(labels)
    if len(labels) != len(graphs):
        raise DimensionMismatchError(
            "got {} labels for {} molecules".format(len(labels), len(graphs)))
    return labels
