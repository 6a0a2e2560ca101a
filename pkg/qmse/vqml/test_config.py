import json

import pytest

from ..base.errors import ConfigError
from ..encoder import EncodingParams
from ..simcore import PauliString
from .ansatz import AnsatzConfig
from .config import (
    PRESET_LAYERS, PRESET_RUNS, Encoding, RunConfig, Task,
    resolve_observable)


class TestResolveObservable:
    def test_global(self):
        assert resolve_observable('global', 3) == PauliString('ZZZ')

    def test_negated_global(self):
        assert resolve_observable('-global', 2) == -PauliString('ZZ')

    def test_padded(self):
        assert resolve_observable('ZZ', 4) == PauliString('ZZII')


class TestRunConfig:
    def test_defaults(self):
        run = RunConfig()
        assert run.task is Task.CLASSIFY
        assert run.encoding is Encoding.QMSE
        assert run.ansatz == AnsatzConfig()
        assert not run.regression

    def test_round_trip(self):
        run = RunConfig(
            task='regression', encoding='fingerprint', dataset='bp',
            ansatz=AnsatzConfig(gate_2q='CRX', layers=3),
            observable='IZZI', max_iters=50, n_restarts=4, k_folds=3,
            seed=2 ** 64 - 1, n_qubits=4,
            encoding_params=EncodingParams(gate_2q='Rzz', layers_x=2))
        assert RunConfig.from_json(run.to_json()) == run
        assert run.regression

    def test_flat_schema(self):
        d = RunConfig().to_dict()
        assert set(d) == set(RunConfig.KEYS)
        assert json.loads(json.dumps(d)) == d

    def test_replace(self):
        run = RunConfig(seed=5).replace(layers=4, k_folds=3)
        assert run.ansatz.layers == 4
        assert run.k_folds == 3
        assert run.seed == 5

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match='learning_rate'):
            RunConfig.from_dict({'task': 'classify', 'learning_rate': 0.1})

    def test_unknown_encoding_param(self):
        with pytest.raises(ConfigError, match='alpha'):
            RunConfig.from_dict({'encoding_params': {'alpha': 1}})

    @pytest.mark.parametrize('kwargs', [
        {'task': 'clustering'},
        {'encoding': 'ECFP'},
        {'observable': 'XZ'},
        {'max_iters': 0},
        {'n_restarts': 2.5},
        {'k_folds': 1},
        {'seed': -1},
        {'seed': 2 ** 64},
        {'tol': 0},
        {'n_qubits': 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            RunConfig(**kwargs)

    def test_invalid_layers_in_dict(self):
        with pytest.raises(ConfigError):
            RunConfig.from_dict({'layers': 'many'})


def test_presets():
    assert sorted(PRESET_RUNS) == list(range(1, 12))
    assert PRESET_RUNS[1].encoding is Encoding.FINGERPRINT
    assert PRESET_RUNS[7].observable == 'IIIIZZIIII'
    assert PRESET_RUNS[11].ansatz.entanglement.value == 'Full'
    assert PRESET_RUNS[10].regression
    assert PRESET_RUNS[10].max_iters == 10000
    assert PRESET_LAYERS[3] == (1, 2, 3, 4, 5)
    assert PRESET_LAYERS[11] == (1, 2, 3, 4, 5, 6)
    for run in PRESET_RUNS.values():
        assert run.n_restarts == 100
        assert run.k_folds == 5
