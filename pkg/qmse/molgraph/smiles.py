from ..base.errors import (
    SmilesParseError, UnbalancedParenthesesError, UnmatchedRingClosureError,
    UnknownAtomSymbolError, DirectionalBondError, DisconnectedSmilesError,
    UnsupportedSmilesFeatureError)
from .elements import ORGANIC_SUBSET, NUMBERS, atomic_number
from .graph import Atom, Bond, BondStereo, MolGraph, TetraParity


__all__ = (
    'parse_smiles',
)


BOND_ORDERS = {'-': 1, '=': 2, '#': 3, '/': 1, '\\': 1}
DIRECTIONAL = ('/', '\\')
FLIP = {'/': '\\', '\\': '/'}


class _PendingBond:
    __slots__ = ('u', 'v', 'order', 'direction', 'position')

    def __init__(self, u, v, order, direction, position):
        self.u = u                  # atom written first
        self.v = v                  # atom written second
        self.order = order
        self.direction = direction  # '/', '\\' or None
        self.position = position


class SmilesParser:
    """
    Recursive-descent-free SMILES reader for the subset described in
    :func:`parse_smiles`.

    The parser walks the string once, keeping a branch stack and an open
    ring-closure table. Bonds are collected with the direction in which they
    were written, which is what the E/Z resolution needs afterwards.

    """
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.atoms = []
        self.bonds = []
        self.prev = None
        self.branch_stack = []
        self.rings = {}          # digit -> (atom, bond char, position)
        self.pending = None      # (bond char, position)

    def error(self, cls, message, position=None):
        return cls(message, smiles=self.text, position=(
            self.pos if position is None else position))

    def parse(self):
        text = self.text
        if not isinstance(text, str) or not text:
            raise SmilesParseError("empty SMILES string")
        try:
            text.encode('ascii')
        except UnicodeEncodeError:
            raise SmilesParseError(
                "SMILES must be ASCII, got: {!r}".format(text))

        while self.pos < len(text):
            ch = text[self.pos]
            if ch == '(':
                self._open_branch()
            elif ch == ')':
                self._close_branch()
            elif ch in BOND_ORDERS:
                self._bond_symbol(ch)
            elif ch in ('$', ':'):
                raise self.error(
                    UnsupportedSmilesFeatureError,
                    "unsupported bond symbol {!r}".format(ch))
            elif ch.isdigit() or ch == '%':
                self._ring_closure()
            elif ch == '.':
                raise self.error(
                    DisconnectedSmilesError,
                    "dot-separated components are not supported; expected a "
                    "single molecule")
            elif ch == '[':
                self._bracket_atom()
            else:
                self._organic_atom()

        if self.branch_stack:
            raise self.error(
                UnbalancedParenthesesError,
                "unbalanced parentheses: {} branch(es) left open"
                .format(len(self.branch_stack)),
                position=self.branch_stack[-1][1])
        if self.rings:
            digit, (_, _, position) = sorted(self.rings.items())[0]
            raise self.error(
                UnmatchedRingClosureError,
                "unmatched ring-closure digit {}".format(digit),
                position=position)
        if self.pending is not None:
            raise self.error(
                SmilesParseError, "dangling bond symbol at end of input",
                position=self.pending[1])

        ez = self._resolve_ez()
        bonds = [
            Bond(b.u, b.v, b.order, ez.get((min(b.u, b.v), max(b.u, b.v))))
            for b in self.bonds]
        return MolGraph(self.atoms, bonds, source=text)

    # --- grammar pieces -------------------------------------------------

    def _open_branch(self):
        if self.prev is None:
            raise self.error(
                UnbalancedParenthesesError,
                "branch opened before any atom")
        if self.pending is not None:
            raise self.error(
                SmilesParseError, "bond symbol directly before a branch")
        self.branch_stack.append((self.prev, self.pos))
        self.pos += 1
        if self.pos < len(self.text) and self.text[self.pos] == ')':
            raise self.error(SmilesParseError, "empty branch")
        if self.pos < len(self.text) and self.text[self.pos] == '(':
            raise self.error(
                SmilesParseError, "branch opened directly inside a branch")

    def _close_branch(self):
        if not self.branch_stack:
            raise self.error(
                UnbalancedParenthesesError,
                "unbalanced parentheses: ')' without matching '('")
        if self.pending is not None:
            raise self.error(
                SmilesParseError, "bond symbol at the end of a branch")
        self.prev, _ = self.branch_stack.pop()
        self.pos += 1

    def _bond_symbol(self, ch):
        if self.pending is not None:
            raise self.error(
                SmilesParseError, "two consecutive bond symbols")
        if self.prev is None:
            raise self.error(
                SmilesParseError, "bond symbol before any atom")
        self.pending = (ch, self.pos)
        self.pos += 1

    def _ring_closure(self):
        if self.prev is None:
            raise self.error(
                SmilesParseError, "ring-closure digit before any atom")
        start = self.pos
        if self.text[self.pos] == '%':
            digits = self.text[self.pos + 1:self.pos + 3]
            if len(digits) != 2 or not digits.isdigit():
                raise self.error(
                    SmilesParseError, "'%' must be followed by two digits")
            digit = int(digits)
            self.pos += 3
        else:
            digit = int(self.text[self.pos])
            self.pos += 1

        char, _ = self.pending if self.pending is not None else (None, None)
        self.pending = None
        if char in DIRECTIONAL:
            raise self.error(
                UnsupportedSmilesFeatureError,
                "directional ring-closure bonds are not supported",
                position=start - 1)

        if digit not in self.rings:
            self.rings[digit] = (self.prev, char, start)
            return

        other, other_char, _ = self.rings.pop(digit)
        if other == self.prev:
            raise self.error(
                SmilesParseError, "ring closure onto the same atom",
                position=start)
        if char and other_char and char != other_char:
            raise self.error(
                SmilesParseError,
                "conflicting ring-closure bond symbols {!r} and {!r}"
                .format(other_char, char), position=start)
        order = BOND_ORDERS[char or other_char or '-']
        self._add_bond(other, self.prev, order, None, start)

    def _bracket_atom(self):
        start = self.pos
        end = self.text.find(']', start)
        if end < 0:
            raise self.error(SmilesParseError, "unterminated bracket atom")
        body = self.text[start + 1:end]
        i = 0

        if i < len(body) and body[i].isdigit():
            raise self.error(
                UnsupportedSmilesFeatureError, "isotopes are not supported")

        if i < len(body) and body[i].islower():
            raise self.error(
                UnsupportedSmilesFeatureError,
                "aromatic atoms are not supported; use Kekule form")
        width = 2 if body[i + 1:i + 2].islower() else 1
        symbol = body[i:i + width]
        if symbol not in NUMBERS and symbol[:1] in NUMBERS:
            symbol = symbol[:1]
        if symbol not in NUMBERS:
            raise self.error(
                UnknownAtomSymbolError,
                "unknown atom symbol {!r}".format(body[i:i + 2] or body))
        if symbol == 'H':
            raise self.error(
                UnsupportedSmilesFeatureError,
                "explicit hydrogen atoms are not supported")
        i += len(symbol)

        parity = None
        if body[i:i + 2] == '@@':
            parity = TetraParity.PLUS
            i += 2
        elif body[i:i + 1] == '@':
            parity = TetraParity.MINUS
            i += 1
        if parity is not None and body[i:i + 1].isalpha() and \
                body[i:i + 1] != 'H':
            raise self.error(
                UnsupportedSmilesFeatureError,
                "only @ and @@ chirality markers are supported")

        # implicit hydrogen count is accepted and dropped
        if body[i:i + 1] == 'H':
            i += 1
            while body[i:i + 1].isdigit():
                i += 1

        rest = body[i:]
        if rest:
            if rest[0] in '+-':
                raise self.error(
                    UnsupportedSmilesFeatureError, "charges are not supported")
            if rest[0] == ':':
                raise self.error(
                    UnsupportedSmilesFeatureError,
                    "atom classes are not supported")
            raise self.error(
                SmilesParseError,
                "unexpected {!r} in bracket atom [{}]".format(rest, body))

        self.pos = end + 1
        self._add_atom(Atom(atomic_number(symbol), parity), start)

    def _organic_atom(self):
        ch = self.text[self.pos]
        two = self.text[self.pos:self.pos + 2]
        if two in ('Cl', 'Br'):
            symbol = two
        elif ch in ORGANIC_SUBSET:
            symbol = ch
        elif ch in 'bcnops':
            raise self.error(
                UnsupportedSmilesFeatureError,
                "aromatic atoms are not supported; use Kekule form")
        else:
            raise self.error(
                UnknownAtomSymbolError, "unknown atom symbol {!r}".format(ch))
        start = self.pos
        self.pos += len(symbol)
        self._add_atom(Atom(atomic_number(symbol)), start)

    def _add_atom(self, atom, position):
        index = len(self.atoms)
        self.atoms.append(atom)
        if self.prev is not None:
            char, bond_pos = self.pending or ('-', position)
            direction = char if char in DIRECTIONAL else None
            self._add_bond(
                self.prev, index, BOND_ORDERS[char], direction, bond_pos)
        self.pending = None
        self.prev = index

    def _add_bond(self, u, v, order, direction, position):
        pair = (min(u, v), max(u, v))
        if any((min(b.u, b.v), max(b.u, b.v)) == pair for b in self.bonds):
            raise self.error(
                SmilesParseError,
                "duplicate bond between atoms {}".format(pair),
                position=position)
        self.bonds.append(_PendingBond(u, v, order, direction, position))

    # --- stereo ---------------------------------------------------------

    def _resolve_ez(self):
        double_atoms = set()
        for b in self.bonds:
            if b.order == 2:
                double_atoms.update((b.u, b.v))

        for b in self.bonds:
            if b.direction is not None and not (
                    b.u in double_atoms or b.v in double_atoms):
                raise self.error(
                    DirectionalBondError,
                    "directional bond {!r} between atoms {} and {} is not "
                    "adjacent to a double bond".format(b.direction, b.u, b.v),
                    position=b.position)

        ez = {}
        for d in self.bonds:
            if d.order != 2:
                continue
            left = self._side_direction(d.u, d)
            right = self._side_direction(d.v, d)
            if left is None or right is None:
                continue
            # written-order direction on both sides: same slash means trans
            stereo = BondStereo.E if left == right else BondStereo.Z
            ez[(min(d.u, d.v), max(d.u, d.v))] = stereo
        return ez

    def _side_direction(self, atom, double):
        """
        The direction of the first directional substituent bond on ``atom``,
        normalized to read as if the substituent were written to the left of
        the double bond and the slash pointed left-to-right.

        """
        for b in self.bonds:
            if b is double or b.direction is None or atom not in (b.u, b.v):
                continue
            is_left_atom = atom == double.u
            written_into_atom = b.v == atom
            # for the left atom the reference is "X/atom", for the right
            # atom it is "atom/X"
            if is_left_atom == written_into_atom:
                return b.direction
            return FLIP[b.direction]
        return None


def parse_smiles(text):
    """
    Parse a SMILES string into a heavy-atom :class:`MolGraph`.

    Supported: the organic subset ``C N O S P F Cl Br I``, bracket atoms with
    an element symbol, optional ``@``/``@@`` marker and an (ignored)
    hydrogen count, branches, ring closures (``1``-``9``, ``%nn``), the bond
    symbols ``- = #`` and the directional bonds ``/`` and ``\\`` around
    double bonds.

    Atoms are numbered in encounter order, which becomes the qubit order.

    Parameters
    ----------
    text : str

        Non-empty ASCII SMILES of a single molecule.

    Returns
    -------
    graph : MolGraph

        The parsed graph, with ``graph.source == text``.

    Raises
    ------
    SmilesParseError

        Or one of its named subclasses: :class:`UnbalancedParenthesesError`,
        :class:`UnmatchedRingClosureError`, :class:`UnknownAtomSymbolError`,
        :class:`DirectionalBondError`, :class:`DisconnectedSmilesError`,
        :class:`UnsupportedSmilesFeatureError`.

    """
    return SmilesParser(text).parse()
