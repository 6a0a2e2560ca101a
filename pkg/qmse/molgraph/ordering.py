from dataclasses import dataclass

from ..base.errors import ElementNotPresentError
from .elements import element_symbol
from .graph import BOND_CHARS


__all__ = (
    'AtomToken',
    'BondToken',
    'dfs_order',
    'dfs_tree',
    'reorder_front',
    'to_token_chain',
)


@dataclass(frozen=True)
class AtomToken:
    index: int
    atomic_number: int
    tetra_parity: object = None
    branches: tuple = ()     # each branch is a tuple of tokens
    ring_bonds: tuple = ()   # partner indices of ring-closure bonds

    @property
    def key(self):
        return (self.atomic_number, self.tetra_parity)

    @property
    def is_branched(self):
        return bool(self.branches or self.ring_bonds)

    def __str__(self):
        s = element_symbol(self.atomic_number)
        if self.tetra_parity is not None:
            s += '@@' if self.tetra_parity.value > 0 else '@'
        for branch in self.branches:
            s += '(branch:{})'.format(_branch_str(branch))
        for j in self.ring_bonds:
            s += '(ring:{})'.format(j)
        return s


@dataclass(frozen=True)
class BondToken:
    a: int
    b: int
    order: int
    ez_flag: object = None

    @property
    def key(self):
        return (self.order, self.ez_flag)

    def __str__(self):
        s = {1: 'single', 2: 'double', 3: 'triple'}[self.order]
        if self.ez_flag is not None:
            s += '-' + self.ez_flag.name
        return s


def _branch_str(tokens):
    parts = []
    for token in tokens:
        if isinstance(token, BondToken):
            if token.order != 1:
                parts.append(BOND_CHARS[token.order])
        else:
            parts.append(str(token))
    return ''.join(parts)


def dfs_order(g, root=0):
    """
    Depth-first atom order starting at ``root``, visiting neighbors in
    ascending index order.

    For a graph parsed from an acyclic SMILES string, ``dfs_order(g, 0)`` is
    just ``range(len(g))``.

    """
    order, _ = dfs_tree(g, root)
    return order


def dfs_tree(g, root=0):
    """
    Depth-first order and tree parents (``None`` for component roots).

    Components not reachable from ``root`` (contracted graphs) are appended
    in index order.

    """
    order = []
    parent = {}
    for start in [root] + list(range(len(g))):
        if start in parent:
            continue
        stack = [(start, None)]
        while stack:
            i, via = stack.pop()
            if i in parent:
                continue
            parent[i] = via
            order.append(i)
            stack.extend(
                (j, i) for j in reversed(g.neighbors(i)) if j not in parent)
    return order, parent


def reorder_front(g, element):
    """
    Re-root the atom order so that the first atom of a given element comes
    first.

    The new order is the depth-first order from that atom (neighbors visited
    in ascending original index), so the result still reads like a SMILES
    encounter order. This is how alcohols and ethers get their oxygen in the
    left-most position.

    Parameters
    ----------
    g : MolGraph

        The input graph.

    element : int

        Atomic number of the element to move to the front.

    Returns
    -------
    graph : MolGraph

        The relabeled graph; ``g`` itself if the element is already at index
        0.

    Raises
    ------
    ElementNotPresentError

        If no atom of the given element exists.

    """
    matches = [i for i, atom in enumerate(g.atoms)
               if atom.atomic_number == element]
    if not matches:
        raise ElementNotPresentError(
            "element not present: {} (Z={}) in {!r}"
            .format(_safe_symbol(element), element, g.source))
    if matches[0] == 0:
        return g
    return g.relabel(dfs_order(g, root=matches[0]))


def _safe_symbol(z):
    try:
        return element_symbol(z)
    except Exception:
        return '?'


def to_token_chain(g):
    """
    Flatten the graph into alternating atom and bond tokens along its main
    chain.

    The main chain starts at atom 0 and always continues with the last
    (highest index) depth-first child, which is the atom written after a
    closing parenthesis. Other children are attached to their parent atom
    token as branches; ring-closure bonds are attached as ``ring_bonds``.

    Example: ``CC(C)C`` gives ``[C, single, C(branch:C), single, C]``.

    """
    if not len(g):
        return []

    order, parent = dfs_tree(g, 0)
    children = {i: [] for i in range(len(g))}
    for i in order:
        if parent[i] is not None:
            children[parent[i]].append(i)

    tree = {(min(i, p), max(i, p)) for i, p in parent.items() if p is not None}
    rings = {i: [] for i in range(len(g))}
    for bond in g.bonds:
        if bond.pair not in tree:
            rings[bond.a].append(bond.b)
            rings[bond.b].append(bond.a)

    def chain(start, via=None):
        tokens = []
        i = start
        if via is not None:
            tokens.append(_bond_token(g, via, i))
        while True:
            kids = children[i]
            branches = tuple(chain(k, via=i) for k in kids[:-1])
            atom = g.atoms[i]
            tokens.append(AtomToken(
                index=i, atomic_number=atom.atomic_number,
                tetra_parity=atom.tetra_parity, branches=branches,
                ring_bonds=tuple(rings[i])))
            if not kids:
                return tokens
            nxt = kids[-1]
            tokens.append(_bond_token(g, i, nxt))
            i = nxt

    tokens = chain(0)
    # disconnected remainder of contracted graphs: start new chains
    covered = {t.index for t in _walk(tokens)}
    for i in order:
        if i not in covered and parent.get(i) is None and i != 0:
            more = chain(i)
            covered.update(t.index for t in _walk(more))
            tokens.extend(more)
    return tokens


def _walk(tokens):
    for token in tokens:
        if isinstance(token, AtomToken):
            yield token
            for branch in token.branches:
                for t in _walk(branch):
                    yield t


def _bond_token(g, i, j):
    bond = g.bond(i, j)
    return BondToken(
        a=bond.a, b=bond.b, order=bond.order, ez_flag=bond.ez_flag)
