import numpy as np

from ..base.errors import WidthMismatchError
from ..base.mixins import LoggerMixin
from ..molgraph import MolGraph, parse_smiles
from ..simcore import Circuit, Gate, run
from ..utils import LRUCache
from .params import EncodingParams


__all__ = (
    'CouplingMatrix',
    'QMSEEncoder',
    'build_matrix',
    'build_qmse_circuit',
    'encode_molecule',
)


class CouplingMatrix:
    """
    The hybrid Coulomb-adjacency matrix of a molecule.

    Atom terms sit on the diagonal, bond terms on the off-diagonal entries of
    bonded atom pairs. All other entries are zero.

    Parameters
    ----------
    entries : 2d array, shape: [n, n]

        The symmetric matrix.

    pairs : iterable of (int, int)

        The bonded pairs ``(i, j)`` with ``i < j``. These are the only
        off-diagonal entries that turn into gates.

    """
    def __init__(self, entries, pairs):
        self.entries = np.array(entries, dtype='float')
        self.entries.setflags(write=False)
        self.pairs = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def diagonal(self):
        return np.diag(self.entries).copy()

    def bond_values(self):
        """ The bond terms in ascending ``(i, j)`` order. """
        return [float(self.entries[i, j]) for i, j in self.pairs]

    def __eq__(self, other):
        if not isinstance(other, CouplingMatrix):
            return NotImplemented
        return self.pairs == other.pairs and \
            np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return "CouplingMatrix(n={}, num_bonds={})".format(
            self.n, len(self.pairs))

    def to_dict(self):
        return {
            'n': self.n,
            'diagonal': [float(x) for x in self.diagonal],
            'bonds': [
                {'pair': [i, j], 'value': float(self.entries[i, j])}
                for i, j in self.pairs],
            'entries': self.entries.tolist()}


def build_matrix(g, params=None):
    """
    Build the hybrid Coulomb-adjacency matrix.

    .. math::

        M_{ii} = \\tfrac12\\,\\epsilon_T(i)\\,Z_i^d\\,,\\qquad
        M_{ij} = \\epsilon_D(ij)\\,\\frac{Z_i Z_j}{b_{ij}}
        \\quad\\text{for bonded } (i, j)

    Parameters
    ----------
    g : MolGraph

        The molecule. Atom ``i`` gives row/column ``i``.

    params : EncodingParams, optional

        Provides the exponent ``d`` and whether the stereo signs
        :math:`\\epsilon_T, \\epsilon_D` are applied.

    Returns
    -------
    matrix : CouplingMatrix

    """
    params = params or EncodingParams()
    n = len(g)
    m = np.zeros((n, n), dtype='float')
    for i, atom in enumerate(g.atoms):
        sign = atom.epsilon_t if params.use_stereo else 1
        m[i, i] = 0.5 * sign * float(atom.atomic_number) ** params.d
    for bond in g.bonds:
        sign = bond.epsilon_d if params.use_stereo else 1
        za = float(g.atoms[bond.a].atomic_number)
        zb = float(g.atoms[bond.b].atomic_number)
        m[bond.a, bond.b] = m[bond.b, bond.a] = sign * za * zb / bond.order
    return CouplingMatrix(m, [bond.pair for bond in g.bonds])


def build_qmse_circuit(matrix, params=None, n_qubits=None):
    """
    Lower a coupling matrix to the structure-encoding circuit.

    Each of the ``layers_x`` blocks applies ``gate_1q(M_ii)`` to every qubit
    ``i`` and then ``gate_2q(M_ij)`` to every bonded pair in ascending
    ``(i, j)`` order. Angles are the raw matrix entries in radians.

    Parameters
    ----------
    matrix : CouplingMatrix

        The matrix to encode.

    params : EncodingParams, optional

        Gate choice and number of blocks.

    n_qubits : int, optional

        Register width. Defaults to the number of atoms; qubits beyond it are
        left idle.

    Returns
    -------
    circuit : Circuit

    """
    params = params or EncodingParams()
    n = matrix.n if n_qubits is None else int(n_qubits)
    if n < matrix.n:
        raise WidthMismatchError(
            "a {}-atom molecule does not fit a {}-qubit register"
            .format(matrix.n, n))
    circuit = Circuit(n)
    for _ in range(params.layers_x):
        for i in range(matrix.n):
            circuit.append(Gate(params.gate_1q, (i,), matrix.entries[i, i]))
        for i, j in matrix.pairs:
            circuit.append(Gate(params.gate_2q, (i, j), matrix.entries[i, j]))
    return circuit


def encode_molecule(g, params=None, n_qubits=None):
    """ Shortcut for ``build_qmse_circuit(build_matrix(g, params), ...)``. """
    return build_qmse_circuit(build_matrix(g, params), params, n_qubits)


def as_graph(molecule):
    if isinstance(molecule, MolGraph):
        return molecule
    return parse_smiles(molecule)


class QMSEEncoder(LoggerMixin):
    """
    Encode a collection of molecules into a common register.

    Molecules with fewer atoms than the register leave the remaining qubits
    in :math:`|0\\rangle`. Encoded statevectors are cached per graph, up to
    ``cache_size`` of them.

    Parameters
    ----------
    params : EncodingParams, optional

        The encoding settings.

    n_qubits : int, optional

        The register width. If omitted it is set by :meth:`fit` to the
        largest molecule.

    max_qubits : int, optional

        Override of the simulator width cap.

    cache_size : positive int or None, optional

        The number of statevectors kept. None keeps all of them.

    """
    name = 'QMSE'

    def __init__(
            self, params=None, n_qubits=None, max_qubits=None,
            cache_size=256):
        self.params = params or EncodingParams()
        self.n_qubits = None if n_qubits is None else int(n_qubits)
        self.max_qubits = max_qubits
        self._cache = LRUCache(cache_size)

    def fit(self, molecules):
        graphs = [as_graph(m) for m in molecules]
        if self.n_qubits is None:
            self.n_qubits = max(len(g) for g in graphs)
            self.logger.debug("register width set to %d", self.n_qubits)
        too_wide = [g.source for g in graphs if len(g) > self.n_qubits]
        if too_wide:
            raise WidthMismatchError(
                "molecules wider than the {}-qubit register: {}"
                .format(self.n_qubits, ', '.join(too_wide)))
        return self

    def circuit(self, molecule):
        g = as_graph(molecule)
        n = self.n_qubits if self.n_qubits is not None else len(g)
        return encode_molecule(g, self.params, n)

    def state(self, molecule):
        g = as_graph(molecule)
        return self._cache.get((g, self.n_qubits), lambda: self._run(g))

    def _run(self, g):
        psi = run(self.circuit(g), max_qubits=self.max_qubits).amplitudes
        psi.setflags(write=False)
        return psi

    def states(self, molecules):
        """
        The encoded statevectors, shape ``[len(molecules), 2 ** n_qubits]``.

        """
        return np.stack([self.state(m) for m in molecules])
