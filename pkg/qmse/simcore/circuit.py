import numpy as np

from ..base.errors import CircuitCheckError, WidthMismatchError
from ..base.mixins import SerializableMixin
from .gates import Gate, GateKind, Parameter


__all__ = (
    'Circuit',
)


class Circuit(SerializableMixin):
    """
    An ordered gate list on a register of ``n_qubits`` qubits.

    Qubit ``0`` is the least significant bit of a basis-state index. Gates may
    carry symbolic angles (:class:`Parameter`), in which case the circuit must
    be bound with :meth:`bind` before it can be simulated.

    Parameters
    ----------
    n_qubits : positive int

        The register width.

    gates : iterable of Gate, optional

        The initial gate list.

    """
    def __init__(self, n_qubits, gates=()):
        self.n_qubits = int(n_qubits)
        if self.n_qubits < 1:
            raise CircuitCheckError(
                "n_qubits must be positive, got: {}".format(n_qubits))
        self._gates = []
        for gate in gates:
            self.append(gate)

    @property
    def gates(self):
        return tuple(self._gates)

    def append(self, gate):
        if max(gate.qubits) >= self.n_qubits:
            raise CircuitCheckError(
                "gate {} out of range for a {}-qubit circuit"
                .format(gate, self.n_qubits))
        self._gates.append(gate)
        return self

    def add(self, kind, qubits, angle=None):
        """
        Append a gate and return the circuit, so that calls can be chained.

        Example: ``Circuit(2).add('ry', [0], 0.3).add('cz', [0, 1])``.

        """
        if isinstance(qubits, int):
            qubits = (qubits,)
        return self.append(Gate(GateKind.parse(kind), tuple(qubits), angle))

    def __len__(self):
        return len(self._gates)

    def __iter__(self):
        return iter(self._gates)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.n_qubits == other.n_qubits and self._gates == other._gates

    def __repr__(self):
        return "Circuit(n_qubits={}, num_gates={})".format(
            self.n_qubits, len(self))

    def __str__(self):
        return '\n'.join(str(gate) for gate in self._gates)

    def count(self, kind):
        kind = GateKind.parse(kind)
        return sum(1 for gate in self._gates if gate.kind is kind)

    @property
    def num_params(self):
        """ One more than the highest symbolic slot index (0 if none). """
        indices = [g.angle.index for g in self._gates if g.is_symbolic]
        return max(indices) + 1 if indices else 0

    @property
    def is_symbolic(self):
        return any(g.is_symbolic for g in self._gates)

    def widen(self, n_qubits):
        """
        The same gates on a wider register. The extra qubits stay idle.

        """
        if n_qubits < self.n_qubits:
            raise WidthMismatchError(
                "cannot narrow a {}-qubit circuit to {} qubits"
                .format(self.n_qubits, n_qubits))
        return Circuit(n_qubits, self._gates)

    def compose(self, other):
        """ This circuit followed by ``other``, on the wider register. """
        n = max(self.n_qubits, other.n_qubits)
        return Circuit(n, list(self._gates) + list(other.gates))

    def bind(self, params):
        """
        Replace symbolic angles by the values of a parameter vector.

        Parameters
        ----------
        params : 1d array, shape: [num_params]

            The parameter values. Slot ``k`` receives ``params[k]``.

        Returns
        -------
        circuit : Circuit

            A new, fully numeric circuit.

        """
        params = np.ravel(np.asarray(params, dtype='float'))
        if params.size < self.num_params:
            raise WidthMismatchError(
                "expected {} parameters, got: {}"
                .format(self.num_params, params.size))
        return Circuit(self.n_qubits, [g.bind(params) for g in self._gates])

    def to_dict(self):
        return {
            'n_qubits': self.n_qubits,
            'gates': [gate.to_dict() for gate in self._gates]}

    @classmethod
    def from_dict(cls, d):
        gates = []
        for g in d['gates']:
            angle = Parameter(g['param']) if 'param' in g else g.get('angle')
            gates.append(Gate(GateKind.parse(g['gate']), g['qubits'], angle))
        return cls(d['n_qubits'], gates)
