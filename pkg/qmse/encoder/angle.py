import numpy as np

from ..base.errors import DimensionMismatchError, RankError
from ..base.mixins import LoggerMixin
from ..simcore import Circuit, Gate, GateKind, run
from ..utils import LRUCache, minmax_scale
from .fingerprint import topological_fingerprint
from .pca import pca_fit, pca_rank
from .structure import as_graph


__all__ = (
    'FingerprintEncoder',
    'build_fingerprint_circuit',
    'scale_angles',
)


def scale_angles(coords, model):
    """
    Min-max scale PCA coordinates onto :math:`[-2\\pi, 2\\pi]` using the
    training ranges stored in ``model``. Values outside a range are clamped.

    """
    coords = np.asarray(coords, dtype='float')
    lo, hi = model.per_feature_range[:, 0], model.per_feature_range[:, 1]
    return minmax_scale(coords, lo, hi, -2 * np.pi, 2 * np.pi, clip=True)


def build_fingerprint_circuit(coords, model, n_qubits, layers_x=1):
    """
    Angle-encode PCA coordinates.

    Each of the ``layers_x`` blocks loads the scaled coordinates as ``Ry``
    angles and then applies a linear CNOT chain ``(i, i + 1)`` for
    ``i = 0 .. n - 2``.

    Parameters
    ----------
    coords : 1d array, shape: [k]

        The projected coordinates of one molecule.

    model : PCAModel

        Provides the frozen scaling ranges.

    n_qubits : int

        Register width; must equal ``k``.

    layers_x : positive int, optional

        Number of encoding blocks.

    Returns
    -------
    circuit : Circuit

    Raises
    ------
    DimensionMismatchError

        If the number of coordinates doesn't match ``n_qubits`` or the model.

    """
    coords = np.ravel(np.asarray(coords, dtype='float'))
    if coords.size != n_qubits or coords.size != model.k:
        raise DimensionMismatchError(
            "got {} coordinates for {} qubits and a {}-component model"
            .format(coords.size, n_qubits, model.k))
    angles = scale_angles(coords, model)
    circuit = Circuit(n_qubits)
    for _ in range(int(layers_x)):
        for i, angle in enumerate(angles):
            circuit.append(Gate(GateKind.RY, (i,), angle))
        for i in range(n_qubits - 1):
            circuit.append(Gate(GateKind.CNOT, (i, i + 1)))
    return circuit


class FingerprintEncoder(LoggerMixin):
    """
    Fingerprint (angle) encoding: path fingerprint, PCA, scaled ``Ry``
    rotations and a CNOT chain.

    The PCA and its scaling ranges are fitted on the molecules passed to
    :meth:`fit` only. If their fingerprints don't have enough rank to fill
    the register, only ``rank`` coordinates are loaded and the remaining
    qubits stay idle.

    Parameters
    ----------
    n_qubits : positive int, optional

        Register width, i.e. the requested number of PCA components.

    nbits : power of two, optional

        Fingerprint length.

    max_path : positive int, optional

        Fingerprint path length.

    layers_x : positive int, optional

        Number of encoding blocks.

    max_qubits : int, optional

        Override of the simulator width cap.

    cache_size : positive int or None, optional

        The number of fingerprints and of statevectors kept.

    """
    name = 'Fingerprint'

    def __init__(
            self,
            n_qubits=10,
            nbits=2048,
            max_path=7,
            layers_x=1,
            max_qubits=None,
            cache_size=256):

        self.n_qubits = int(n_qubits)
        self.nbits = int(nbits)
        self.max_path = int(max_path)
        self.layers_x = int(layers_x)
        self.max_qubits = max_qubits
        self.model = None
        self._fp_cache = LRUCache(cache_size)
        self._state_cache = LRUCache(cache_size)

    def fingerprint(self, molecule):
        g = as_graph(molecule)
        return self._fp_cache.get(g, lambda: topological_fingerprint(
            g, self.nbits, self.max_path))

    def fit(self, molecules):
        fps = [self.fingerprint(m) for m in molecules]
        k = self.n_qubits
        try:
            self.model = pca_fit(fps, k)
        except RankError:
            k = min(self.n_qubits, pca_rank(fps))
            self.logger.warning(
                "training fingerprints have rank %d < %d qubits; loading %d "
                "coordinates, the remaining qubits stay idle",
                k, self.n_qubits, k)
            self.model = pca_fit(fps, k) if k > 0 else None
        self._state_cache.clear()
        return self

    @property
    def k(self):
        return 0 if self.model is None else self.model.k

    def circuit(self, molecule):
        if self.model is None:
            return Circuit(self.n_qubits)
        coords = self.model.project([self.fingerprint(molecule)])[0]
        circuit = build_fingerprint_circuit(
            coords, self.model, self.model.k, self.layers_x)
        return circuit.widen(self.n_qubits)

    def state(self, molecule):
        g = as_graph(molecule)
        return self._state_cache.get(g, lambda: self._run(g))

    def _run(self, g):
        psi = run(self.circuit(g), max_qubits=self.max_qubits).amplitudes
        psi.setflags(write=False)
        return psi

    def states(self, molecules):
        return np.stack([self.state(m) for m in molecules])
