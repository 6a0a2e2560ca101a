import numpy as np

from ..base.errors import DatasetError
from ..encoder.structure import as_graph


__all__ = (
    'Dataset',
)


class Dataset:
    """
    Molecules with binary labels and/or real-valued targets.

    Parameters
    ----------
    molecules : list of MolGraph or str

        The molecules (SMILES strings are parsed).

    labels : 1d array of {0, 1}, optional

        Class labels, for classification.

    targets : 1d array of float, optional

        Real-valued targets, for regression.

    names : list of str, optional

        Display names. Default to each molecule's SMILES.

    """
    def __init__(self, molecules, labels=None, targets=None, names=None):
        self.graphs = [as_graph(m) for m in molecules]
        n = len(self.graphs)
        self.names = list(names) if names is not None else [
            g.source or 'M{}'.format(i) for i, g in enumerate(self.graphs)]
        self.labels = None if labels is None else np.asarray(labels)
        self.targets = None if targets is None else \
            np.asarray(targets, dtype='float')
        for name, arr in (('labels', self.labels), ('targets', self.targets),
                          ('names', self.names)):
            if arr is not None and len(arr) != n:
                raise DatasetError(
                    "got {} {} for {} molecules".format(len(arr), name, n))
        if self.labels is not None:
            bad = sorted(set(self.labels.tolist()) - {0, 1})
            if bad:
                raise DatasetError(
                    "labels must be 0 or 1, got: {}".format(bad))
            self.labels = self.labels.astype('int')

    @classmethod
    def from_records(cls, records):
        """
        Build a dataset from ingested records. Labels (targets) are kept only
        if every record has one.

        """
        records = list(records)
        labels = [r.label for r in records]
        targets = [r.target for r in records]
        return cls(
            [r.smiles for r in records],
            labels=None if any(x is None for x in labels) else labels,
            targets=None if any(x is None for x in targets) else targets,
            names=[r.name for r in records])

    def __len__(self):
        return len(self.graphs)

    def __repr__(self):
        return "Dataset(num_molecules={}, labels={}, targets={})".format(
            len(self), self.labels is not None, self.targets is not None)

    @property
    def max_atoms(self):
        return max(len(g) for g in self.graphs)
