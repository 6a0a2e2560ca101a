import hashlib
import itertools
from dataclasses import dataclass
from enum import Enum

from ..base.errors import GraphCheckError
from .elements import element_symbol


__all__ = (
    'Atom',
    'Bond',
    'BondStereo',
    'MolGraph',
    'TetraParity',
)


class TetraParity(Enum):
    """ Tetrahedral parity marker, valued as the sign :math:`\\epsilon_T`. """
    PLUS = 1    # '@@'
    MINUS = -1  # '@'


class BondStereo(Enum):
    """ Double-bond geometry; the value is the sign :math:`\\epsilon_D`. """
    E = 1
    Z = -1


BOND_CHARS = {1: '-', 2: '=', 3: '#'}


@dataclass(frozen=True)
class Atom:
    """
    A heavy atom.

    Parameters
    ----------
    atomic_number : positive int

        The atomic number :math:`\\mathcal{Z}`.

    tetra_parity : TetraParity or None

        Set only if the SMILES carried a tetrahedral marker on this atom.

    """
    atomic_number: int
    tetra_parity: TetraParity = None

    def __post_init__(self):
        if int(self.atomic_number) < 1:
            raise GraphCheckError(
                "atomic_number must be positive, got: {}"
                .format(self.atomic_number))

    @property
    def symbol(self):
        return element_symbol(self.atomic_number)

    @property
    def epsilon_t(self):
        return 1 if self.tetra_parity is None else self.tetra_parity.value

    @property
    def token(self):
        return (self.atomic_number, self.tetra_parity)

    def __str__(self):
        if self.tetra_parity is None:
            return self.symbol
        mark = '@@' if self.tetra_parity is TetraParity.PLUS else '@'
        return '[{}{}]'.format(self.symbol, mark)


@dataclass(frozen=True)
class Bond:
    """
    A covalent bond between atoms ``a < b``.

    The endpoints are normalized on construction, so ``Bond(3, 1)`` and
    ``Bond(1, 3)`` are the same bond.

    """
    a: int
    b: int
    order: int = 1
    ez_flag: BondStereo = None

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == b:
            raise GraphCheckError(
                "bond endpoints must differ, got: {}".format(a))
        if min(a, b) < 0:
            raise GraphCheckError("bond endpoints must be non-negative")
        if self.order not in (1, 2, 3):
            raise GraphCheckError(
                "bond order must be 1, 2 or 3, got: {}".format(self.order))
        if self.ez_flag is not None and self.order != 2:
            raise GraphCheckError(
                "E/Z flag on a bond of order {} between {} and {}"
                .format(self.order, a, b))
        object.__setattr__(self, 'a', min(a, b))
        object.__setattr__(self, 'b', max(a, b))

    @property
    def pair(self):
        return (self.a, self.b)

    @property
    def epsilon_d(self):
        return 1 if self.ez_flag is None else self.ez_flag.value

    @property
    def token(self):
        return (self.order, self.ez_flag)

    def other(self, i):
        if i == self.a:
            return self.b
        if i == self.b:
            return self.a
        raise GraphCheckError("atom {} not in bond {}".format(i, self.pair))

    def __str__(self):
        s = BOND_CHARS[self.order]
        if self.ez_flag is not None:
            s += self.ez_flag.name
        return s


class MolGraph:
    """
    Heavy-atom molecular graph.

    The atom order is the qubit mapping: atom ``i`` is encoded on qubit ``i``.
    Graphs are immutable; all transformations return new instances.

    Parameters
    ----------
    atoms : sequence of Atom

        The atoms in encounter order.

    bonds : iterable of Bond

        The bonds. They are stored sorted by ``(a, b)``.

    source : str, optional

        The SMILES text the graph was parsed from (or derived from).

    """
    def __init__(self, atoms, bonds, source=''):
        self._atoms = tuple(atoms)
        self._bonds = tuple(sorted(bonds, key=lambda bond: bond.pair))
        self._source = source
        self._check()

        self._bond_map = {bond.pair: bond for bond in self._bonds}
        adjacency = [[] for _ in self._atoms]
        for bond in self._bonds:
            adjacency[bond.a].append(bond.b)
            adjacency[bond.b].append(bond.a)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    def _check(self):
        n = len(self._atoms)
        seen = set()
        for bond in self._bonds:
            if bond.b >= n:
                raise GraphCheckError(
                    "bond {} refers to a missing atom, num_atoms: {}"
                    .format(bond.pair, n))
            if bond.pair in seen:
                raise GraphCheckError(
                    "duplicate bond between atoms {}".format(bond.pair))
            seen.add(bond.pair)

    @property
    def atoms(self):
        return self._atoms

    @property
    def bonds(self):
        return self._bonds

    @property
    def source(self):
        return self._source

    @property
    def num_atoms(self):
        return len(self._atoms)

    @property
    def num_bonds(self):
        return len(self._bonds)

    def __len__(self):
        return len(self._atoms)

    def __eq__(self, other):
        if not isinstance(other, MolGraph):
            return NotImplemented
        return self._atoms == other._atoms and self._bonds == other._bonds

    def __hash__(self):
        return hash((self._atoms, self._bonds))

    def __repr__(self):
        return "MolGraph(source={!r}, num_atoms={}, num_bonds={})".format(
            self._source, self.num_atoms, self.num_bonds)

    def neighbors(self, i):
        """ The neighbors of atom ``i``, sorted by index. """
        return self._adjacency[i]

    def degree(self, i):
        return len(self._adjacency[i])

    def bond(self, i, j):
        """ The bond between atoms ``i`` and ``j``, or ``None``. """
        return self._bond_map.get((min(i, j), max(i, j)))

    def is_connected(self):
        if not self._atoms:
            return True
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self._adjacency[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self._atoms)

    def relabel(self, order):
        """
        Permute the atoms.

        Parameters
        ----------
        order : sequence of int

            The new atom order: ``order[new_index] = old_index``.

        Returns
        -------
        graph : MolGraph

            The relabeled graph, with bond indices remapped consistently.

        """
        order = [int(i) for i in order]
        if sorted(order) != list(range(self.num_atoms)):
            raise GraphCheckError(
                "relabel expects a permutation of range({}), got: {}"
                .format(self.num_atoms, order))
        new_index = {old: new for new, old in enumerate(order)}
        atoms = [self._atoms[old] for old in order]
        bonds = [
            Bond(new_index[bond.a], new_index[bond.b], bond.order,
                 bond.ez_flag)
            for bond in self._bonds]
        return MolGraph(atoms, bonds, source=self._source)

    def subgraph(self, keep):
        """
        Induced subgraph on the atoms in ``keep``, in their current order.

        The result need not be connected.

        """
        keep = sorted(int(i) for i in keep)
        new_index = {old: new for new, old in enumerate(keep)}
        atoms = [self._atoms[old] for old in keep]
        bonds = [
            Bond(new_index[bond.a], new_index[bond.b], bond.order,
                 bond.ez_flag)
            for bond in self._bonds
            if bond.a in new_index and bond.b in new_index]
        return MolGraph(atoms, bonds, source=self._source)

    def signature(self):
        """
        A stable digest of the atoms and bonds (not of the source text).

        """
        h = hashlib.blake2b(digest_size=16)
        for atom in self._atoms:
            h.update(repr(atom.token).encode('ascii'))
        h.update(b'|')
        for bond in self._bonds:
            h.update(repr((bond.pair, bond.token)).encode('ascii'))
        return h.hexdigest()

    def canonical_key(self, max_atoms=9):
        """
        Canonical form for small graphs, used to test isomorphism.

        Atoms are sorted by their token, and the permutations within each
        group of identical tokens are searched exhaustively for the
        lexicographically smallest bond list.

        """
        n = self.num_atoms
        if n > max_atoms:
            raise GraphCheckError(
                "canonical_key is exhaustive and limited to {} atoms, got: {}"
                .format(max_atoms, n))

        def sort_key(i):
            z, parity = self._atoms[i].token
            return (z, 0 if parity is None else parity.value)

        groups = [
            list(g) for _, g in itertools.groupby(
                sorted(range(n), key=sort_key), key=sort_key)]
        atom_part = tuple(sort_key(g[0]) for g in groups for _ in g)

        best = None
        for perms in itertools.product(
                *(itertools.permutations(g) for g in groups)):
            order = [i for p in perms for i in p]
            new_index = {old: new for new, old in enumerate(order)}
            bonds = tuple(sorted(
                (min(new_index[b.a], new_index[b.b]),
                 max(new_index[b.a], new_index[b.b]),
                 b.order, b.epsilon_d if b.ez_flag is not None else 0)
                for b in self._bonds))
            if best is None or bonds < best:
                best = bonds
        return atom_part, best
