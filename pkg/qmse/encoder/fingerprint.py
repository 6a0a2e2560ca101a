import hashlib

import numpy as np

from ..base.errors import DimensionMismatchError
from ..molgraph.graph import BOND_CHARS


__all__ = (
    'Fingerprint',
    'path_strings',
    'topological_fingerprint',
)


class Fingerprint:
    """
    A fixed-length binary fingerprint.

    Parameters
    ----------
    bits : 1d array of bool

        The bit vector. Its length must be a power of two.

    """
    def __init__(self, bits):
        bits = np.array(bits, dtype='bool').ravel()
        n = bits.size
        if n < 1 or n & (n - 1):
            raise DimensionMismatchError(
                "fingerprint length must be a power of two, got: {}"
                .format(n))
        bits.setflags(write=False)
        self.bits = bits

    @classmethod
    def from_indices(cls, indices, nbits):
        bits = np.zeros(nbits, dtype='bool')
        bits[list(indices)] = True
        return cls(bits)

    @property
    def nbits(self):
        return self.bits.size

    @property
    def n_set(self):
        return int(np.count_nonzero(self.bits))

    @property
    def indices(self):
        return np.flatnonzero(self.bits)

    def __len__(self):
        return self.nbits

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __repr__(self):
        return "Fingerprint(nbits={}, n_set={})".format(self.nbits, self.n_set)

    def to_array(self, dtype='float'):
        return self.bits.astype(dtype)


def _atom_label(g, i):
    atom = g.atoms[i]
    label = '{}{}'.format(atom.symbol, g.degree(i))
    if atom.tetra_parity is not None:
        label += '@' if atom.tetra_parity.value < 0 else '@@'
    return label


def _bond_label(g, i, j):
    bond = g.bond(i, j)
    label = BOND_CHARS[bond.order]
    if bond.ez_flag is not None:
        label += bond.ez_flag.name
    return label


def _path_string(tokens):
    forward = ''.join(tokens)
    backward = ''.join(reversed(tokens))
    return min(forward, backward)


def path_strings(g, max_path=7):
    """
    The canonical strings of all simple linear paths with up to ``max_path``
    bonds, including the single-atom paths.

    Atoms are labelled by element symbol and heavy-atom degree (plus a
    tetrahedral marker), bonds by ``-``, ``=`` or ``#`` (plus ``E``/``Z``).
    Each path string is the lexicographic minimum of its two reading
    directions, e.g. ``'C1-C2'``.

    Returns
    -------
    strings : set of str

    """
    atom_labels = [_atom_label(g, i) for i in range(len(g))]
    strings = set()

    def extend(path, tokens):
        strings.add(_path_string(tokens))
        if len(path) > max_path:
            return
        last = path[-1]
        for j in g.neighbors(last):
            if j in path:
                continue
            extend(path + [j],
                   tokens + [_bond_label(g, last, j), atom_labels[j]])

    for i in range(len(g)):
        extend([i], [atom_labels[i]])
    return strings


def _hash64(text):
    digest = hashlib.blake2b(text.encode('ascii'), digest_size=8).digest()
    return int.from_bytes(digest, 'little')


def topological_fingerprint(g, nbits=2048, max_path=7):
    """
    Path-hash topological fingerprint.

    Every simple linear path of 0 to ``max_path`` bonds is written as a
    canonical string (see :func:`path_strings`), hashed with 64-bit BLAKE2b
    and folded into ``nbits`` bits by ``hash % nbits``. The result only
    depends on the graph, so it is identical across platforms and runs.

    Parameters
    ----------
    g : MolGraph

        The molecule.

    nbits : power of two, optional

        Fingerprint length :math:`\\tau`.

    max_path : positive int, optional

        Maximum path length in bonds.

    Returns
    -------
    fingerprint : Fingerprint

    """
    nbits = int(nbits)
    if nbits < 1 or nbits & (nbits - 1):
        raise DimensionMismatchError(
            "nbits must be a power of two, got: {}".format(nbits))
    if int(max_path) < 1:
        raise DimensionMismatchError(
            "max_path must be at least 1, got: {}".format(max_path))
    indices = {_hash64(s) % nbits for s in path_strings(g, int(max_path))}
    return Fingerprint.from_indices(sorted(indices), nbits)
