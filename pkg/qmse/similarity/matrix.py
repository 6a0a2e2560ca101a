from enum import Enum
from io import StringIO

import numpy as np
import pandas as pd

from ..base.errors import DimensionMismatchError, NumpyArrayCheckError
from ..base.mixins import SerializableMixin


__all__ = (
    'SimilarityKind',
    'SimilarityMatrix',
)


class SimilarityKind(Enum):
    TANIMOTO = 'Tanimoto'
    FIDELITY = 'Fidelity'


def _round12(x):
    return float('{:.12g}'.format(x))


class SimilarityMatrix(SerializableMixin):
    """
    A symmetric matrix of pairwise similarities with a unit diagonal.

    Parameters
    ----------
    labels : list of str

        The molecule names, one per row.

    values : 2d array, shape: [n, n]

        The similarities, all within :math:`[0, 1]`.

    kind : SimilarityKind or str

        Either ``'Tanimoto'`` or ``'Fidelity'``.

    metadata : dict, optional

        Settings that produced the matrix, e.g. the gate set and whether
        chain contraction was used.

    qubits : 2d array of int, optional

        The register width each pair was evaluated on. The diagonal isn't
        evaluated and holds zeros.

    """
    TOL = 1e-10

    def __init__(self, labels, values, kind, metadata=None, qubits=None):
        self.labels = [str(label) for label in labels]
        self.values = np.array(values, dtype='float')
        self.kind = SimilarityKind(kind) if isinstance(kind, str) else kind
        self.metadata = dict(metadata or {})
        self.qubits = None if qubits is None else np.array(qubits, dtype='int')
        self._check()

    def _check(self):
        n = len(self.labels)
        if self.values.shape != (n, n):
            raise DimensionMismatchError(
                "expected a {0}x{0} matrix for {0} labels, got shape: {1}"
                .format(n, self.values.shape))
        if self.qubits is not None and self.qubits.shape != (n, n):
            raise DimensionMismatchError(
                "qubit counts have shape {}, expected: {}"
                .format(self.qubits.shape, (n, n)))
        if not np.allclose(self.values, self.values.T, rtol=0, atol=self.TOL):
            raise NumpyArrayCheckError("similarity matrix is not symmetric")
        if not np.allclose(np.diag(self.values), 1, rtol=0, atol=self.TOL):
            raise NumpyArrayCheckError(
                "similarity matrix must have a unit diagonal")
        if self.values.size and (
                self.values.min() < -1e-12 or self.values.max() > 1 + 1e-12):
            raise NumpyArrayCheckError(
                "similarities must lie within [0, 1], got range [{}, {}]"
                .format(self.values.min(), self.values.max()))

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return "SimilarityMatrix(kind={!r}, n={})".format(
            self.kind.value, len(self))

    def off_diagonal(self):
        """ The upper-triangle values, row by row. """
        i, j = np.triu_indices(len(self), k=1)
        return self.values[i, j]

    def variance(self):
        """
        Sample variance of the off-diagonal values. Needs at least two pairs,
        i.e. three molecules; returns ``nan`` otherwise.

        """
        off = self.off_diagonal()
        if off.size < 2:
            return float('nan')
        return float(np.var(off, ddof=1))

    def to_frame(self):
        df = pd.DataFrame(self.values, index=self.labels, columns=self.labels)
        df.index.name = 'label'
        return df

    def to_csv(self, path=None):
        """
        Write the matrix as CSV, with the labels as header row and first
        column. Returns the text if no path is given.

        """
        return self.to_frame().to_csv(path, float_format='%.12g')

    def qubits_to_csv(self, path=None):
        if self.qubits is None:
            raise ValueError("no qubit counts recorded for this matrix")
        df = pd.DataFrame(self.qubits, index=self.labels, columns=self.labels)
        df.index.name = 'label'
        return df.to_csv(path)

    def to_grid(self):
        """
        A whitespace-separated grid, one matrix row per line, preceded by
        comment lines naming the rows. This is the layout gnuplot reads with
        ``plot '...' matrix with image``.

        """
        out = StringIO()
        out.write("# kind: {}\n".format(self.kind.value))
        for i, label in enumerate(self.labels):
            out.write("# {:d}: {}\n".format(i, label))
        for row in self.values:
            out.write(' '.join('{:.12g}'.format(x) for x in row) + '\n')
        return out.getvalue()

    def to_dict(self):
        d = {
            'kind': self.kind.value,
            'labels': list(self.labels),
            'values': [[_round12(x) for x in row] for row in self.values],
        }
        d.update(self.metadata)
        if self.qubits is not None:
            d['qubits'] = self.qubits.tolist()
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        labels = d.pop('labels')
        values = d.pop('values')
        kind = d.pop('kind')
        qubits = d.pop('qubits', None)
        return cls(labels, values, kind, metadata=d, qubits=qubits)
