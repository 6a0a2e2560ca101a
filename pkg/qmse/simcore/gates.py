from dataclasses import dataclass
from enum import Enum

from ..base.errors import CircuitCheckError


__all__ = (
    'Gate',
    'GateKind',
    'Parameter',
)


class GateKind(Enum):
    RX = 'Rx'
    RY = 'Ry'
    RZ = 'Rz'
    RXX = 'Rxx'
    RYY = 'Ryy'
    RZZ = 'Rzz'
    CZ = 'CZ'
    CNOT = 'CNOT'
    CRX = 'CRX'
    X = 'X'

    @classmethod
    def parse(cls, name):
        """
        Look up a gate kind by name, case-insensitively.

        Parameters
        ----------
        name : str or GateKind

            E.g. ``'ry'``, ``'Rxx'`` or ``GateKind.CZ``.

        Returns
        -------
        kind : GateKind

        """
        if isinstance(name, cls):
            return name
        lookup = {kind.value.lower(): kind for kind in cls}
        try:
            return lookup[str(name).strip().lower()]
        except KeyError:
            raise CircuitCheckError(
                "unknown gate {!r}, expected one of: {}"
                .format(name, ', '.join(k.value for k in cls)))

    @property
    def num_qubits(self):
        return 1 if self in (GateKind.RX, GateKind.RY, GateKind.RZ,
                             GateKind.X) else 2

    @property
    def has_angle(self):
        return self not in (GateKind.CZ, GateKind.CNOT, GateKind.X)


@dataclass(frozen=True)
class Parameter:
    """
    A symbolic angle slot, bound later by :meth:`Circuit.bind`.

    Parameters
    ----------
    index : non-negative int

        Position in the parameter vector.

    """
    index: int

    def __str__(self):
        return 'theta[{}]'.format(self.index)


@dataclass(frozen=True)
class Gate:
    """
    A single gate application.

    Parameters
    ----------
    kind : GateKind

        The gate type.

    qubits : tuple of int

        One or two qubit indices. For the controlled gates ``CNOT`` and
        ``CRX`` the first index is the control.

    angle : float or Parameter, optional

        Rotation angle in radians. Must be omitted for ``CZ``, ``CNOT`` and
        ``X``.

    """
    kind: GateKind
    qubits: tuple
    angle: object = None

    def __post_init__(self):
        kind = GateKind.parse(self.kind)
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'qubits', qubits)
        if len(qubits) != kind.num_qubits:
            raise CircuitCheckError(
                "{} acts on {} qubit(s), got qubits: {}"
                .format(kind.value, kind.num_qubits, qubits))
        if len(set(qubits)) != len(qubits):
            raise CircuitCheckError(
                "qubit indices must be distinct, got: {}".format(qubits))
        if min(qubits) < 0:
            raise CircuitCheckError(
                "qubit indices must be non-negative, got: {}".format(qubits))
        if kind.has_angle and self.angle is None:
            raise CircuitCheckError("{} requires an angle".format(kind.value))
        if not kind.has_angle and self.angle is not None:
            raise CircuitCheckError("{} takes no angle".format(kind.value))
        if self.angle is not None and not isinstance(self.angle, Parameter):
            object.__setattr__(self, 'angle', float(self.angle))

    @property
    def is_symbolic(self):
        return isinstance(self.angle, Parameter)

    def bind(self, params):
        if not self.is_symbolic:
            return self
        return Gate(self.kind, self.qubits, float(params[self.angle.index]))

    def to_dict(self):
        d = {'gate': self.kind.value, 'qubits': list(self.qubits)}
        if self.is_symbolic:
            d['param'] = self.angle.index
        elif self.angle is not None:
            d['angle'] = self.angle
        return d

    def __str__(self):
        qubits = ','.join(str(q) for q in self.qubits)
        if self.angle is None:
            return '{}[{}]'.format(self.kind.value, qubits)
        if self.is_symbolic:
            return '{}({})[{}]'.format(self.kind.value, self.angle, qubits)
        return '{}({:.12g})[{}]'.format(self.kind.value, self.angle, qubits)
