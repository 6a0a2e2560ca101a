import logging
import os
from functools import lru_cache

import numpy as np

from ..base.errors import (
    CircuitCheckError, ConfigError, QubitLimitError, WidthMismatchError)
from ..utils import check_numpy_array
from .circuit import Circuit
from .gates import GateKind


__all__ = (
    'DEFAULT_MAX_QUBITS',
    'Statevector',
    'apply_gate',
    'check_width',
    'expectation',
    'fidelity',
    'get_max_qubits',
    'run',
    'run_batch',
    'unitary',
)


DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = 'QMSE_MAX_QUBITS'


def get_max_qubits(max_qubits=None):
    """
    The simulator width cap.

    An explicit ``max_qubits`` wins over the ``QMSE_MAX_QUBITS`` environment
    variable, which wins over :data:`DEFAULT_MAX_QUBITS`.

    """
    if max_qubits is not None:
        return int(max_qubits)
    value = os.environ.get(MAX_QUBITS_ENV, '').strip()
    if not value:
        return DEFAULT_MAX_QUBITS
    try:
        return int(value)
    except ValueError:
        raise ConfigError(
            "{} must be an integer, got: {!r}".format(MAX_QUBITS_ENV, value))


def check_width(n_qubits, max_qubits=None):
    """
    Raise :class:`QubitLimitError` if a register of ``n_qubits`` exceeds the
    simulator cap. The message states the memory the statevector would need.

    """
    limit = get_max_qubits(max_qubits)
    if n_qubits > limit:
        gib = 16.0 * 2 ** n_qubits / 2 ** 30
        raise QubitLimitError(
            "a {}-qubit statevector needs {:.4g} GiB of memory, which exceeds "
            "the limit of {} qubits; pass max_qubits or set {} to override"
            .format(n_qubits, gib, limit, MAX_QUBITS_ENV))


# --- gate kernels ----------------------------------------------------------


def _rotation(kind, theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    if kind is GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind is GateKind.RY:
        return np.array([[c, -s], [s, c]], dtype='complex128')
    if kind is GateKind.RZ:
        return np.array([
            [np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]])
    raise CircuitCheckError("not a single-qubit rotation: {}".format(kind))


def _axis(tensor, q):
    # the last axis is qubit 0 (least significant bit)
    return tensor.ndim - 1 - q


def _select(tensor, assignments):
    index = [slice(None)] * tensor.ndim
    for axis, value in assignments.items():
        index[axis] = value
    return tuple(index)


def _axis_sign(ndim, axis):
    shape = [1] * ndim
    shape[axis] = 2
    return np.array([1.0, -1.0]).reshape(shape)


@lru_cache(maxsize=64)
def _parity_sign(n_qubits, mask):
    # +1 where the bits of z selected by mask have even parity, else -1
    sign = np.ones((2,) * n_qubits)
    for q in range(n_qubits):
        if (mask >> q) & 1:
            sign = sign * _axis_sign(n_qubits, n_qubits - 1 - q)
    sign = sign.ravel()
    sign.setflags(write=False)
    return sign


def _apply_2x2(tensor, u, sel0, sel1):
    a0, a1 = tensor[sel0], tensor[sel1]
    new0 = u[0, 0] * a0 + u[0, 1] * a1
    new1 = u[1, 0] * a0 + u[1, 1] * a1
    tensor[sel0] = new0
    tensor[sel1] = new1


def _swap(tensor, sel0, sel1):
    tmp = tensor[sel0].copy()
    tensor[sel0] = tensor[sel1]
    tensor[sel1] = tmp


def apply_gate(psi, gate, n_qubits):
    """
    Apply a single (numeric) gate to a statevector or a stack of them.

    The amplitudes are viewed as a tensor with one axis of size 2 per qubit,
    so every gate is a handful of strided array operations on :math:`O(2^n)`
    amplitudes.

    Parameters
    ----------
    psi : complex ndarray, shape: [..., 2 ** n_qubits]

        The amplitudes, little-endian. The array is updated in place where
        possible; always use the return value.

    gate : Gate

        The gate to apply.

    n_qubits : positive int

        The register width.

    Returns
    -------
    psi : complex ndarray, shape: [..., 2 ** n_qubits]

        The updated amplitudes.

    """
    kind = gate.kind
    if gate.is_symbolic:
        raise CircuitCheckError(
            "gate {} has a symbolic angle; bind the circuit first"
            .format(gate))

    psi = np.ascontiguousarray(psi)
    tensor = psi.reshape(psi.shape[:-1] + (2,) * n_qubits)
    axes = [_axis(tensor, q) for q in gate.qubits]

    if kind in (GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.X):
        ax, = axes
        sel0, sel1 = _select(tensor, {ax: 0}), _select(tensor, {ax: 1})
        if kind is GateKind.X:
            _swap(tensor, sel0, sel1)
        else:
            _apply_2x2(tensor, _rotation(kind, gate.angle), sel0, sel1)
        return psi

    ai, aj = axes
    if kind in (GateKind.RXX, GateKind.RYY, GateKind.RZZ):
        c, s = np.cos(gate.angle / 2), np.sin(gate.angle / 2)
        sign = _axis_sign(tensor.ndim, ai) * _axis_sign(tensor.ndim, aj)
        if kind is GateKind.RZZ:
            tensor *= c - 1j * s * sign
            return psi
        flipped = np.flip(tensor, axis=(ai, aj))
        if kind is GateKind.RXX:
            out = c * tensor - 1j * s * flipped
        else:
            out = c * tensor + 1j * s * sign * flipped
        return out.reshape(psi.shape)

    if kind is GateKind.CZ:
        tensor[_select(tensor, {ai: 1, aj: 1})] *= -1
        return psi

    sel0 = _select(tensor, {ai: 1, aj: 0})
    sel1 = _select(tensor, {ai: 1, aj: 1})
    if kind is GateKind.CNOT:
        _swap(tensor, sel0, sel1)
        return psi
    if kind is GateKind.CRX:
        _apply_2x2(tensor, _rotation(GateKind.RX, gate.angle), sel0, sel1)
        return psi

    raise CircuitCheckError("unsupported gate: {}".format(kind))


# --- state ---------------------------------------------------------------


class Statevector:
    """
    The :math:`2^n` complex amplitudes of an :math:`n`-qubit register.

    Basis-state indices are little-endian: qubit 0 is the least significant
    bit, so e.g. ``X`` on qubit 0 of a 3-qubit register yields amplitude 1 at
    index 1.

    Parameters
    ----------
    amplitudes : 1d array, shape: [2 ** n_qubits]

        The amplitudes. They are copied.

    """
    def __init__(self, amplitudes):
        arr = np.array(amplitudes, dtype='complex128')
        check_numpy_array(arr, ndim=1)
        n_qubits = int(arr.size).bit_length() - 1
        if arr.size != 1 << n_qubits or n_qubits < 1:
            raise WidthMismatchError(
                "number of amplitudes must be a power of two >= 2, got: {}"
                .format(arr.size))
        self._amplitudes = arr
        self.n_qubits = n_qubits

    @classmethod
    def zero(cls, n_qubits):
        """ The state :math:`|0\\dots0\\rangle`. """
        arr = np.zeros(1 << int(n_qubits), dtype='complex128')
        arr[0] = 1
        return cls(arr)

    @property
    def amplitudes(self):
        return self._amplitudes

    def __len__(self):
        return self._amplitudes.size

    def __repr__(self):
        return "Statevector(n_qubits={})".format(self.n_qubits)

    def norm(self):
        return float(np.linalg.norm(self._amplitudes))

    def expectation(self, observable):
        return expectation(self, observable)

    def fidelity(self, other):
        return fidelity(self, other)


def _as_amplitudes(state):
    if isinstance(state, Statevector):
        return state.amplitudes
    return np.asarray(state)


def run(circuit, initial_state=None, max_qubits=None):
    """
    Simulate a circuit.

    Parameters
    ----------
    circuit : Circuit

        A fully bound circuit.

    initial_state : Statevector or 1d array, optional

        The state to start from. Defaults to :math:`|0\\dots0\\rangle`.

    max_qubits : int, optional

        Override of the simulator width cap.

    Returns
    -------
    state : Statevector

        The final state.

    Raises
    ------
    QubitLimitError

        If the circuit is wider than the cap.

    """
    check_width(circuit.n_qubits, max_qubits)
    if initial_state is None:
        psi = Statevector.zero(circuit.n_qubits).amplitudes
    else:
        psi = np.array(_as_amplitudes(initial_state), dtype='complex128')
        if psi.shape != (1 << circuit.n_qubits,):
            raise WidthMismatchError(
                "initial state of shape {} does not fit a {}-qubit circuit"
                .format(psi.shape, circuit.n_qubits))
    for gate in circuit:
        psi = apply_gate(psi, gate, circuit.n_qubits)
    return Statevector(psi)


def run_batch(circuit, states, max_qubits=None):
    """
    Apply the same circuit to a stack of statevectors.

    Parameters
    ----------
    circuit : Circuit

        A fully bound circuit.

    states : 2d array, shape: [batch_size, 2 ** n_qubits]

        The initial states.

    Returns
    -------
    states : 2d complex array, shape: [batch_size, 2 ** n_qubits]

        The final states (a new array).

    """
    check_width(circuit.n_qubits, max_qubits)
    psi = np.array(states, dtype='complex128')
    check_numpy_array(psi, ndim=2, axis_size=1 << circuit.n_qubits, axis=1)
    for gate in circuit:
        psi = apply_gate(psi, gate, circuit.n_qubits)
    return psi


def expectation(state, observable):
    """
    Expectation value of a Z-type Pauli string.

    Parameters
    ----------
    state : Statevector or array, shape: [..., 2 ** n_qubits]

        A single state or a stack of states.

    observable : PauliString

        The observable; its width must match the state's.

    Returns
    -------
    value : float or ndarray

        :math:`\\sum_z |\\psi_z|^2 (-1)^{\\text{popcount}(z \\wedge m)}`, with
        :math:`m` the mask of Z positions, times the observable's
        coefficient. One value per state for stacked input.

    """
    psi = _as_amplitudes(state)
    n_qubits = observable.width
    if psi.shape[-1] != 1 << n_qubits:
        raise WidthMismatchError(
            "observable {} has width {}, state has {} amplitudes"
            .format(observable, n_qubits, psi.shape[-1]))
    probs = np.abs(psi) ** 2
    value = observable.coefficient * (
        probs @ _parity_sign(n_qubits, observable.z_mask))
    return float(value) if np.ndim(value) == 0 else value


def fidelity(p, q, max_qubits=None):
    """
    The fidelity :math:`|\\langle\\psi_Q|\\psi_P\\rangle|^2`.

    Parameters
    ----------
    p, q : Circuit or Statevector

        Circuits are simulated from :math:`|0\\dots0\\rangle` first.

    Returns
    -------
    fidelity : float between 0 and 1

    Raises
    ------
    WidthMismatchError

        If the two registers differ in width.

    """
    if isinstance(p, Circuit) and isinstance(q, Circuit) and \
            p.n_qubits != q.n_qubits:
        raise WidthMismatchError(
            "fidelity needs equal widths, got: {} and {}"
            .format(p.n_qubits, q.n_qubits))
    psi_p = _as_amplitudes(run(p, max_qubits=max_qubits)
                           if isinstance(p, Circuit) else p)
    psi_q = _as_amplitudes(run(q, max_qubits=max_qubits)
                           if isinstance(q, Circuit) else q)
    if psi_p.shape != psi_q.shape:
        raise WidthMismatchError(
            "fidelity needs equal widths, got states of shape {} and {}"
            .format(psi_p.shape, psi_q.shape))
    return float(np.clip(np.abs(np.vdot(psi_q, psi_p)) ** 2, 0.0, 1.0))


# --- dense oracle ----------------------------------------------------------


_I2 = np.eye(2, dtype='complex128')
_X = np.array([[0, 1], [1, 0]], dtype='complex128')
_Y = np.array([[0, -1j], [1j, 0]], dtype='complex128')
_Z = np.array([[1, 0], [0, -1]], dtype='complex128')
_P0 = np.array([[1, 0], [0, 0]], dtype='complex128')
_P1 = np.array([[0, 0], [0, 1]], dtype='complex128')


def _embed(ops, n_qubits):
    out = np.ones((1, 1), dtype='complex128')
    for q in reversed(range(n_qubits)):
        out = np.kron(out, ops.get(q, _I2))
    return out


def _gate_matrix(gate, n_qubits):
    kind = gate.kind
    if kind in (GateKind.RX, GateKind.RY, GateKind.RZ):
        return _embed({gate.qubits[0]: _rotation(kind, gate.angle)}, n_qubits)
    if kind is GateKind.X:
        return _embed({gate.qubits[0]: _X}, n_qubits)
    i, j = gate.qubits
    if kind in (GateKind.RXX, GateKind.RYY, GateKind.RZZ):
        pauli = {GateKind.RXX: _X, GateKind.RYY: _Y, GateKind.RZZ: _Z}[kind]
        c, s = np.cos(gate.angle / 2), np.sin(gate.angle / 2)
        return c * _embed({}, n_qubits) - \
            1j * s * _embed({i: pauli, j: pauli}, n_qubits)
    target = {
        GateKind.CZ: _Z,
        GateKind.CNOT: _X,
        GateKind.CRX: _rotation(GateKind.RX, gate.angle or 0.0),
    }[kind]
    return _embed({i: _P0}, n_qubits) + _embed({i: _P1, j: target}, n_qubits)


def unitary(circuit, max_qubits=10):
    """
    The full :math:`2^n \\times 2^n` matrix of a circuit, built naively from
    Kronecker products of the textbook gate definitions.

    This is independent of the amplitude-update code in :func:`apply_gate`
    and is meant as a test oracle for small circuits.

    """
    if circuit.n_qubits > max_qubits:
        raise QubitLimitError(
            "unitary() is limited to {} qubits, got: {}"
            .format(max_qubits, circuit.n_qubits))
    if circuit.is_symbolic:
        raise CircuitCheckError("bind the circuit before building its unitary")
    logging.getLogger('unitary').debug(
        "building dense unitary for %r", circuit)
    u = _embed({}, circuit.n_qubits)
    for gate in circuit:
        u = _gate_matrix(gate, circuit.n_qubits) @ u
    return u
