from ..base.errors import UnsupportedObservableError


__all__ = (
    'PauliString',
)


class PauliString:
    """
    A Z-type Pauli-string observable such as ``IIIIZZIIII``.

    The LEFTMOST letter acts on qubit 0, so the string reads in qubit order
    even though basis-state indices are little-endian.

    Parameters
    ----------
    letters : str

        A string over ``{'I', 'Z'}``. The letters ``X`` and ``Y`` are
        reserved but not implemented.

    coefficient : float, optional

        Overall sign or scale of the observable, so that ``-PauliString('Z')``
        is representable.

    """
    def __init__(self, letters, coefficient=1.0):
        letters = str(letters).strip().upper()
        if not letters:
            raise UnsupportedObservableError("empty Pauli string")
        for pos, letter in enumerate(letters):
            if letter in 'XY':
                raise UnsupportedObservableError(
                    "{} observables are not supported, got {!r} at qubit {}"
                    .format(letter, letters, pos))
            if letter not in 'IZ':
                raise UnsupportedObservableError(
                    "invalid Pauli letter {!r} in {!r}"
                    .format(letter, letters))
        self.letters = letters
        self.coefficient = float(coefficient)

    @classmethod
    def parse(cls, text):
        """
        Parse ``'ZZII'``, ``'-ZZII'`` or ``'+ZZII'``.

        """
        text = str(text).strip()
        coefficient = 1.0
        if text and text[0] in '+-':
            coefficient = -1.0 if text[0] == '-' else 1.0
            text = text[1:]
        return cls(text, coefficient)

    @classmethod
    def global_z(cls, n_qubits):
        """ The all-Z observable on ``n_qubits`` qubits. """
        return cls('Z' * int(n_qubits))

    @classmethod
    def local_z(cls, n_qubits, qubits):
        """ Z on the given qubits, identity elsewhere. """
        qubits = set(int(q) for q in qubits)
        if qubits and (min(qubits) < 0 or max(qubits) >= n_qubits):
            raise UnsupportedObservableError(
                "qubits {} out of range for width {}"
                .format(sorted(qubits), n_qubits))
        return cls(''.join(
            'Z' if q in qubits else 'I' for q in range(int(n_qubits))))

    @property
    def width(self):
        return len(self.letters)

    @property
    def z_qubits(self):
        return tuple(
            q for q, letter in enumerate(self.letters) if letter == 'Z')

    @property
    def z_mask(self):
        """ Bit mask of the Z positions in little-endian basis indices. """
        mask = 0
        for q in self.z_qubits:
            mask |= 1 << q
        return mask

    def widen(self, n_qubits):
        """ Pad with identities up to ``n_qubits``. """
        if n_qubits < self.width:
            raise UnsupportedObservableError(
                "cannot narrow {!r} to {} qubits"
                .format(self.letters, n_qubits))
        return PauliString(
            self.letters + 'I' * (n_qubits - self.width), self.coefficient)

    def __neg__(self):
        return PauliString(self.letters, -self.coefficient)

    def __eq__(self, other):
        if not isinstance(other, PauliString):
            return NotImplemented
        return (self.letters, self.coefficient) == \
            (other.letters, other.coefficient)

    def __hash__(self):
        return hash((self.letters, self.coefficient))

    def __str__(self):
        if self.coefficient == 1:
            return self.letters
        if self.coefficient == -1:
            return '-' + self.letters
        return '{:g}*{}'.format(self.coefficient, self.letters)

    def __repr__(self):
        return "PauliString({!r})".format(str(self))
