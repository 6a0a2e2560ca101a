from enum import Enum

from ..base.errors import ConfigError, QMSEError
from ..base.mixins import SerializableMixin
from ..encoder import EncodingParams
from ..simcore import PauliString
from .ansatz import AnsatzConfig


__all__ = (
    'Encoding',
    'RunConfig',
    'PRESET_LAYERS',
    'PRESET_RUNS',
    'Task',
    'resolve_observable',
)


class Task(Enum):
    CLASSIFY = 'classify'
    REGRESS = 'regress'


class Encoding(Enum):
    QMSE = 'QMSE'
    FINGERPRINT = 'Fingerprint'


_TASK_ALIASES = {
    'classify': Task.CLASSIFY, 'classification': Task.CLASSIFY,
    'regress': Task.REGRESS, 'regression': Task.REGRESS}

GLOBAL_OBSERVABLE = 'global'


def _parse_enum(cls, value, key, aliases=None):
    if isinstance(value, cls):
        return value
    lookup = aliases or {e.value.lower(): e for e in cls}
    try:
        return lookup[str(value).strip().lower()]
    except KeyError:
        raise ConfigError(
            "invalid value {!r} for {!r}, expected one of: {}"
            .format(value, key, ', '.join(sorted(lookup))))


def resolve_observable(observable, n_qubits):
    """
    Turn an observable description into a :class:`PauliString` of width
    ``n_qubits``.

    ``'global'`` (or ``'Z'`` repeated) means Z on every qubit. Shorter
    strings are padded with identities on the right.

    """
    if isinstance(observable, PauliString):
        pauli = observable
    elif str(observable).strip().lower() in (GLOBAL_OBSERVABLE, '-global'):
        sign = -1.0 if str(observable).strip().startswith('-') else 1.0
        pauli = PauliString('Z' * int(n_qubits), sign)
    else:
        pauli = PauliString.parse(observable)
    return pauli.widen(n_qubits)


class RunConfig(SerializableMixin):
    """
    One variational training experiment.

    Parameters
    ----------
    task : str, optional

        ``'classify'`` or ``'regress'``.

    encoding : str, optional

        ``'QMSE'`` or ``'Fingerprint'``.

    ansatz : AnsatzConfig, optional

        The trainable block.

    observable : str, optional

        ``'global'`` for Z on every qubit, or a Pauli string such as
        ``'IIIIZZIIII'`` (leftmost letter on qubit 0).

    max_iters : int, optional

        Optimizer evaluation budget per restart.

    n_restarts : int, optional

        Random initial points per fold.

    k_folds : int, optional

        Number of cross-validation folds.

    seed : int, optional

        Base seed (64 bits) for the splits and the initial points.

    encoding_params : EncodingParams, optional

        Structure-encoding settings. For the fingerprint encoding only
        ``layers_x`` is used.

    dataset : str, optional

        Name or path of the dataset the run refers to.

    n_qubits : int, optional

        Register width. Defaults to the largest molecule of the dataset, for
        both encodings.

    tol : float, optional

        Final trust radius of the optimizer.

    """
    KEYS = (
        'task', 'dataset', 'encoding', 'gate_1q', 'gate_2q', 'entanglement',
        'layers', 'observable', 'max_iters', 'n_restarts', 'k_folds', 'seed',
        'encoding_params', 'n_qubits', 'tol')

    def __init__(
            self,
            task='classify',
            encoding='QMSE',
            ansatz=None,
            observable=GLOBAL_OBSERVABLE,
            max_iters=1000,
            n_restarts=100,
            k_folds=5,
            seed=0,
            encoding_params=None,
            dataset=None,
            n_qubits=None,
            tol=1e-6):

        self.task = _parse_enum(Task, task, 'task', _TASK_ALIASES)
        self.encoding = _parse_enum(Encoding, encoding, 'encoding')
        self.ansatz = ansatz or AnsatzConfig()
        self.observable = str(observable)
        self.max_iters = _positive_int(max_iters, 'max_iters')
        self.n_restarts = _positive_int(n_restarts, 'n_restarts')
        self.k_folds = _positive_int(k_folds, 'k_folds')
        if self.k_folds < 2:
            raise ConfigError("k_folds must be at least 2, got: {}"
                              .format(k_folds))
        self.seed = _seed(seed)
        self.encoding_params = encoding_params or EncodingParams()
        self.dataset = None if dataset is None else str(dataset)
        self.n_qubits = None if n_qubits is None else \
            _positive_int(n_qubits, 'n_qubits')
        self.tol = float(tol)
        if not self.tol > 0:
            raise ConfigError("tol must be positive, got: {}".format(tol))
        try:
            resolve_observable(self.observable, self.n_qubits or 64)
        except QMSEError as e:
            raise ConfigError("invalid 'observable': {}".format(e))

    @property
    def regression(self):
        return self.task is Task.REGRESS

    def replace(self, **kwargs):
        """ A copy with some (flat, schema-level) keys replaced. """
        d = self.to_dict()
        d.update(kwargs)
        return RunConfig.from_dict(d)

    def to_dict(self):
        d = {
            'task': self.task.value,
            'dataset': self.dataset,
            'encoding': self.encoding.value,
            'observable': self.observable,
            'max_iters': self.max_iters,
            'n_restarts': self.n_restarts,
            'k_folds': self.k_folds,
            'seed': self.seed,
            'encoding_params': self.encoding_params.to_dict(),
            'n_qubits': self.n_qubits,
            'tol': self.tol,
        }
        d.update(self.ansatz.to_dict())
        return d

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise ConfigError(
                "run config must be a JSON object, got: {}"
                .format(type(d).__name__))
        unknown = sorted(set(d) - set(cls.KEYS))
        if unknown:
            raise ConfigError(
                "unknown run config key(s): {}".format(', '.join(unknown)))
        d = dict(d)
        ansatz_keys = ('gate_1q', 'gate_2q', 'entanglement', 'layers')
        encoding_params = d.pop('encoding_params', None)
        if encoding_params is not None and \
                not isinstance(encoding_params, dict):
            raise ConfigError("'encoding_params' must be an object")
        try:
            ansatz = AnsatzConfig(
                **{k: d.pop(k) for k in ansatz_keys if k in d})
            if encoding_params is not None:
                encoding_params = EncodingParams.from_dict(encoding_params)
            return cls(ansatz=ansatz, encoding_params=encoding_params, **d)
        except (TypeError, ValueError) as e:
            raise ConfigError("invalid run config value: {}".format(e))

    def __eq__(self, other):
        if not isinstance(other, RunConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return "RunConfig({})".format(', '.join(
            '{}={!r}'.format(k, v) for k, v in sorted(self.to_dict().items())))


def _positive_int(value, key):
    try:
        ivalue = int(value)
    except (TypeError, ValueError):
        raise ConfigError(
            "{!r} must be an integer, got: {!r}".format(key, value))
    if ivalue != value or ivalue < 1:
        raise ConfigError(
            "{!r} must be a positive integer, got: {!r}".format(key, value))
    return ivalue


def _seed(value):
    try:
        seed = int(value)
    except (TypeError, ValueError):
        raise ConfigError("'seed' must be an integer, got: {!r}".format(value))
    if seed != value or not 0 <= seed < 2 ** 64:
        raise ConfigError(
            "'seed' must be an integer in [0, 2**64), got: {!r}".format(value))
    return seed


def _preset(**kwargs):
    task = kwargs.pop('task', 'classify')
    dataset = kwargs.pop('dataset', 'alkane')
    encoding = kwargs.pop('encoding', 'QMSE')
    observable = kwargs.pop('observable', GLOBAL_OBSERVABLE)
    max_iters = kwargs.pop('max_iters')
    return RunConfig(
        task=task, dataset=dataset, encoding=encoding,
        ansatz=AnsatzConfig(**kwargs), observable=observable,
        max_iters=max_iters, n_restarts=100, k_folds=5, n_qubits=10)


#: The classification and regression runs, keyed by run number, each with a
#: single ansatz layer; see :data:`PRESET_LAYERS` for the layer ranges.
PRESET_RUNS = {
    1: _preset(encoding='Fingerprint', gate_2q='CZ',
               entanglement='Linear', max_iters=1000),
    2: _preset(encoding='Fingerprint', gate_2q='CZ',
               entanglement='Pairwise', max_iters=1000),
    3: _preset(gate_2q='CZ', entanglement='Linear', max_iters=1000),
    4: _preset(gate_2q='CZ', entanglement='Pairwise', max_iters=1000),
    5: _preset(dataset='complete', gate_2q='CZ', entanglement='Pairwise',
               max_iters=2000),
    6: _preset(dataset='complete', gate_2q='CRX', entanglement='Pairwise',
               max_iters=2000),
    7: _preset(dataset='complete', gate_2q='CRX', entanglement='Pairwise',
               observable='IIIIZZIIII', max_iters=2000),
    8: _preset(dataset='complete', gate_2q='CRX', entanglement='Pairwise',
               observable='IIIZZZZIII', max_iters=2000),
    9: _preset(dataset='complete', gate_2q='CRX', entanglement='Pairwise',
               observable='ZZIIIIIIII', max_iters=2000),
    10: _preset(task='regress', gate_2q='CRX', entanglement='Pairwise',
                max_iters=10000),
    11: _preset(task='regress', gate_2q='CRX', entanglement='Full',
                max_iters=10000),
}

PRESET_LAYERS = {
    run_id: tuple(range(1, 7 if run_id >= 10 else 6))
    for run_id in PRESET_RUNS}
