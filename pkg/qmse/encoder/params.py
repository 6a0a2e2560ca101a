from ..base.errors import CircuitCheckError, ConfigError
from ..base.mixins import SerializableMixin
from ..simcore import GateKind


__all__ = (
    'EncodingParams',
)


ONE_QUBIT_GATES = (GateKind.RX, GateKind.RY, GateKind.RZ)
TWO_QUBIT_GATES = (GateKind.RXX, GateKind.RYY, GateKind.RZZ)


class EncodingParams(SerializableMixin):
    """
    Settings of the structure encoding.

    Parameters
    ----------
    d : positive float, optional

        Exponent of the atomic number in the atom (diagonal) terms.

    use_stereo : bool, optional

        Whether to apply the E/Z and tetrahedral signs. If false, every sign
        is taken to be :math:`+1`.

    gate_1q : str or GateKind, optional

        The atom rotation, one of ``'Rx'``, ``'Ry'``, ``'Rz'``.

    gate_2q : str or GateKind, optional

        The bond rotation, one of ``'Rxx'``, ``'Ryy'``, ``'Rzz'``.

    layers_x : positive int, optional

        Number of repetitions :math:`L_x` of the encoding block.

    """
    def __init__(
            self,
            d=3.0,
            use_stereo=True,
            gate_1q='Ry',
            gate_2q='Rxx',
            layers_x=1):

        self.d = float(d)
        self.use_stereo = bool(use_stereo)
        self.gate_1q = _parse_gate(gate_1q, ONE_QUBIT_GATES, 'gate_1q')
        self.gate_2q = _parse_gate(gate_2q, TWO_QUBIT_GATES, 'gate_2q')
        self.layers_x = int(layers_x)
        if not self.d > 0:
            raise ConfigError("d must be positive, got: {}".format(d))
        if self.layers_x < 1:
            raise ConfigError(
                "layers_x must be at least 1, got: {}".format(layers_x))

    def replace(self, **kwargs):
        """ A copy with some fields replaced. """
        d = self.to_dict()
        d.update(kwargs)
        return EncodingParams.from_dict(d)

    def to_dict(self):
        return {
            'd': self.d,
            'use_stereo': self.use_stereo,
            'gate_1q': self.gate_1q.value,
            'gate_2q': self.gate_2q.value,
            'layers_x': self.layers_x}

    @classmethod
    def from_dict(cls, d):
        unknown = set(d) - {'d', 'use_stereo', 'gate_1q', 'gate_2q',
                            'layers_x'}
        if unknown:
            raise ConfigError(
                "unknown encoding parameter(s): {}"
                .format(', '.join(sorted(unknown))))
        return cls(**d)

    def __eq__(self, other):
        if not isinstance(other, EncodingParams):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self):
        return (
            "EncodingParams(d={d}, use_stereo={use_stereo}, "
            "gate_1q={gate_1q!r}, gate_2q={gate_2q!r}, layers_x={layers_x})"
            .format(**self.to_dict()))


def _parse_gate(name, allowed, field):
    try:
        kind = GateKind.parse(name)
    except CircuitCheckError:
        kind = None
    if kind not in allowed:
        raise ConfigError(
            "{} must be one of {}, got: {!r}"
            .format(field, ', '.join(k.value for k in allowed), name))
    return kind
