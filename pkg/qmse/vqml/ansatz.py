from enum import Enum

from ..base.errors import CircuitCheckError, ConfigError
from ..base.mixins import SerializableMixin
from ..simcore import Circuit, Gate, GateKind, Parameter


__all__ = (
    'AnsatzConfig',
    'Entanglement',
    'ParamCircuit',
    'build_ansatz',
    'entangler_pairs',
)


class Entanglement(Enum):
    LINEAR = 'Linear'
    PAIRWISE = 'Pairwise'
    FULL = 'Full'

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        lookup = {e.value.lower(): e for e in cls}
        try:
            return lookup[str(name).strip().lower()]
        except KeyError:
            raise ConfigError(
                "unknown entanglement {!r}, expected one of: {}"
                .format(name, ', '.join(e.value for e in cls)))


ENTANGLING_GATES = (GateKind.CZ, GateKind.CRX)


class AnsatzConfig(SerializableMixin):
    """
    Settings of the trainable circuit block.

    Parameters
    ----------
    gate_1q : str, optional

        The trainable rotation. Only ``'Ry'`` is supported.

    gate_2q : str, optional

        The entangler, ``'CZ'`` or ``'CRX'``. CRX entanglers carry their own
        trainable angle.

    entanglement : str, optional

        ``'Linear'``, ``'Pairwise'`` or ``'Full'``.

    layers : positive int, optional

        The number of blocks :math:`L_\\theta`.

    """
    def __init__(
            self,
            gate_1q='Ry',
            gate_2q='CZ',
            entanglement='Linear',
            layers=1):

        try:
            self.gate_1q = GateKind.parse(gate_1q)
            self.gate_2q = GateKind.parse(gate_2q)
        except CircuitCheckError as e:
            raise ConfigError(str(e))
        if self.gate_1q is not GateKind.RY:
            raise ConfigError(
                "gate_1q must be Ry, got: {}".format(self.gate_1q.value))
        if self.gate_2q not in ENTANGLING_GATES:
            raise ConfigError(
                "gate_2q must be CZ or CRX, got: {}"
                .format(self.gate_2q.value))
        self.entanglement = Entanglement.parse(entanglement)
        self.layers = int(layers)
        if self.layers < 1:
            raise ConfigError(
                "layers must be at least 1, got: {}".format(layers))

    def replace(self, **kwargs):
        d = self.to_dict()
        d.update(kwargs)
        return AnsatzConfig.from_dict(d)

    def to_dict(self):
        return {
            'gate_1q': self.gate_1q.value,
            'gate_2q': self.gate_2q.value,
            'entanglement': self.entanglement.value,
            'layers': self.layers}

    @classmethod
    def from_dict(cls, d):
        return cls(**d)

    def __eq__(self, other):
        if not isinstance(other, AnsatzConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return (
            "AnsatzConfig(gate_1q={gate_1q!r}, gate_2q={gate_2q!r}, "
            "entanglement={entanglement!r}, layers={layers})"
            .format(**self.to_dict()))


def entangler_pairs(n_qubits, entanglement):
    """
    The qubit pairs of one entangling layer, in application order.

    Parameters
    ----------
    n_qubits : positive int

        Register width.

    entanglement : Entanglement or str

        ``Linear`` gives :math:`(i, i+1)`. ``Pairwise`` gives the even pairs
        :math:`(0,1), (2,3), \\dots` followed by the odd pairs
        :math:`(1,2), (3,4), \\dots`. ``Full`` gives every :math:`i<j`.

    Returns
    -------
    pairs : list of (int, int)

    """
    entanglement = Entanglement.parse(entanglement)
    n = int(n_qubits)
    if entanglement is Entanglement.LINEAR:
        return [(i, i + 1) for i in range(n - 1)]
    if entanglement is Entanglement.PAIRWISE:
        even = [(i, i + 1) for i in range(0, n - 1, 2)]
        odd = [(i, i + 1) for i in range(1, n - 1, 2)]
        return even + odd
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


class ParamCircuit:
    """
    A circuit with symbolic angle slots.

    Slots are numbered layer by layer; within a layer the rotations come
    first (by qubit), then the trainable entanglers (in application order).

    Parameters
    ----------
    skeleton : Circuit

        The symbolic circuit.

    n_params : int

        The number of slots.

    """
    def __init__(self, skeleton, n_params):
        self.skeleton = skeleton
        self.n_params = int(n_params)

    @property
    def n_qubits(self):
        return self.skeleton.n_qubits

    def bind(self, theta):
        return self.skeleton.bind(theta)

    def __repr__(self):
        return "ParamCircuit(n_qubits={}, n_params={}, num_gates={})".format(
            self.n_qubits, self.n_params, len(self.skeleton))


def build_ansatz(n_qubits, cfg):
    """
    Build the trainable block

    .. math::

        U(\\theta)\\ =\\ \\prod_{l=1}^{L_\\theta} U_\\text{ent}\\,
            \\bigotimes_j R_y(\\theta_{l,j})

    There is no trailing rotation layer.

    Parameters
    ----------
    n_qubits : positive int

        Register width.

    cfg : AnsatzConfig

        The ansatz settings.

    Returns
    -------
    ansatz : ParamCircuit

        Has ``layers * (n_qubits + e * c)`` slots, where ``e`` is the number
        of entanglers per layer and ``c`` is 1 for CRX and 0 for CZ.

    """
    n = int(n_qubits)
    if n < 1:
        raise ConfigError("ansatz needs at least one qubit, got: {}".format(n))
    pairs = entangler_pairs(n, cfg.entanglement)
    circuit = Circuit(n)
    k = 0
    for _ in range(cfg.layers):
        for q in range(n):
            circuit.append(Gate(GateKind.RY, (q,), Parameter(k)))
            k += 1
        for pair in pairs:
            if cfg.gate_2q is GateKind.CRX:
                circuit.append(Gate(GateKind.CRX, pair, Parameter(k)))
                k += 1
            else:
                circuit.append(Gate(GateKind.CZ, pair))
    return ParamCircuit(circuit, k)
