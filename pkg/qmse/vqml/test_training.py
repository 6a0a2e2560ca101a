import numpy as np
import pytest

from ..base.errors import (
    ConfigError, ConstantTargetError, DatasetError, SingleClassFoldError)
from ..cli.fixtures import load_fixture
from .ansatz import AnsatzConfig
from .config import RunConfig
from .data import Dataset
from .training import RunResult, run_experiment, run_layer_sweep, train_vqc


def toy_data():
    return Dataset(['C', 'O', 'C', 'O'], labels=[1, 0, 1, 0])


def toy_run(**kwargs):
    kwargs.setdefault('k_folds', 2)
    kwargs.setdefault('n_restarts', 3)
    kwargs.setdefault('max_iters', 200)
    kwargs.setdefault('seed', 7)
    return RunConfig(**kwargs)


class TestRunExperiment:
    def test_separable_toy(self):
        result = run_experiment(toy_run(), toy_data())
        assert result.n_qubits == 1
        assert result.n_params == 1
        assert len(result.restarts) == 6
        s = result.summary()
        assert s['train']['median'] == 1.0
        assert s['test']['median'] == 1.0
        assert [(r['fold'], r['restart']) for r in result.restarts] == [
            (f, r) for f in range(2) for r in range(3)]

    def test_traces_monotone(self):
        result = run_experiment(toy_run(), toy_data())
        for r in result.restarts:
            assert np.all(np.diff(r['trace']) <= 0)
            assert r['final_loss'] == r['trace'][-1]
        frame = result.loss_frame()
        assert list(frame.columns) == ['fold', 'restart', 'iteration', 'loss']
        assert len(frame) == sum(len(r['trace']) for r in result.restarts)

    def test_deterministic(self):
        a = run_experiment(toy_run(), toy_data())
        b = run_experiment(toy_run(), toy_data())
        assert a.to_json() == b.to_json()

    def test_parallel_matches_serial(self):
        a = run_experiment(toy_run(), toy_data())
        b = run_experiment(toy_run(), toy_data(), n_jobs=2)
        assert a.to_json() == b.to_json()

    def test_seed_changes_initial_points(self):
        a = run_experiment(toy_run(max_iters=1), toy_data())
        b = run_experiment(toy_run(max_iters=1, seed=8), toy_data())
        assert a.restarts[0]['theta'] != b.restarts[0]['theta']
        for r in a.restarts:
            assert -2 * np.pi <= r['theta'][0] <= 2 * np.pi

    def test_json_round_trip(self):
        result = run_experiment(toy_run(), toy_data())
        again = RunResult.from_json(result.to_json())
        assert again.to_json() == result.to_json()
        assert again.config == result.config

    def test_fingerprint_encoding(self):
        data = Dataset(['CCO', 'CCC', 'CCCO', 'CCCC', 'OCCO', 'CC(C)C'],
                       labels=[1, 0, 1, 0, 1, 0])
        result = run_experiment(
            toy_run(encoding='Fingerprint', n_qubits=2, max_iters=20), data)
        assert result.n_qubits == 2
        assert np.all(np.isfinite(result.scores('test')))

    def test_regression(self):
        data = Dataset(['C', 'CC', 'CCC', 'CCCC', 'O', 'CO'],
                       targets=[111.7, 184.6, 231.1, 272.7, 373.1, 337.8])
        result = run_experiment(
            toy_run(task='regress', n_qubits=4, max_iters=30), data)
        assert result.n_params == 4
        assert np.all(result.scores('train') <= 1)

    def test_missing_labels(self):
        data = Dataset(['C', 'O', 'C', 'O'], targets=[1.0, 2.0, 3.0, 4.0])
        with pytest.raises(DatasetError, match='labels'):
            run_experiment(toy_run(), data)

    def test_single_class_fold(self):
        data = Dataset(['C', 'O', 'C', 'O', 'N'], labels=[1, 1, 1, 1, 0])
        with pytest.raises(SingleClassFoldError):
            run_experiment(toy_run(), data)

    def test_constant_targets(self):
        data = Dataset(['C', 'O', 'N', 'CC'], targets=[1.0, 1.0, 1.0, 1.0])
        with pytest.raises(ConstantTargetError):
            run_experiment(toy_run(task='regress'), data)

    def test_task_check(self):
        with pytest.raises(ConfigError):
            train_vqc(toy_data(), toy_run(task='regress'))


class TestRunResult:
    def make(self, train_scores):
        restarts = [
            {'fold': 0, 'restart': i, 'train_score': s, 'test_score': s,
             'final_loss': 1 - s, 'trace': [1.0, 1 - s], 'theta': [float(i)]}
            for i, s in enumerate(train_scores)]
        return RunResult(RunConfig(), 1, 1, [], restarts)

    def test_median_model(self):
        result = self.make([0.2, 0.9, 0.5, 0.6, 0.4])
        assert result.median_index == 2
        assert result.summary()['median_model']['theta'] == [2.0]

    def test_median_tie_is_earliest(self):
        result = self.make([0.25, 0.75, 1.0, 0.0])
        assert result.median_index == 0

    def test_non_finite_scores_skipped(self):
        result = self.make([np.nan, 0.3, 0.5, 0.7])
        s = result.summary()
        assert s['train']['median'] == pytest.approx(0.5)
        assert result.median_index == 2


def test_layer_sweep():
    results = run_layer_sweep(toy_run(max_iters=5, n_restarts=1), toy_data(),
                              layers=[1, 2])
    assert sorted(results) == [1, 2]
    assert results[2].n_params == 2
    assert results[2].config.ansatz == AnsatzConfig(layers=2)


@pytest.mark.slow
class TestDeskScale:
    @pytest.fixture(scope='class')
    def phase_results(self):
        data = Dataset.from_records(load_fixture('alkanes_phase'))
        run = RunConfig(
            task='classify', dataset='alkanes_phase',
            ansatz=AnsatzConfig(gate_2q='CZ', entanglement='Linear', layers=3),
            max_iters=500, n_restarts=10, k_folds=5, seed=13)
        return {
            encoding: run_experiment(run.replace(encoding=encoding), data)
            for encoding in ('QMSE', 'Fingerprint')}

    def test_qmse_classifier(self, phase_results):
        s = phase_results['QMSE'].summary()
        assert s['train']['median'] >= 0.95
        assert s['test']['median'] >= 0.8

    def test_fingerprint_generalizes_worse(self, phase_results):
        qmse_summary = phase_results['QMSE'].summary()
        fingerprint = phase_results['Fingerprint'].summary()
        assert fingerprint['test']['median'] < qmse_summary['test']['median']

    def test_qmse_reaches_lower_loss(self, phase_results):
        qmse_summary = phase_results['QMSE'].summary()
        fingerprint = phase_results['Fingerprint'].summary()
        assert (qmse_summary['final_loss']['median'] <
                fingerprint['final_loss']['median'])
        for result in phase_results.values():
            for r in result.restarts:
                assert np.all(np.diff(r['trace']) <= 0)

    def test_qmse_regressor(self):
        data = Dataset.from_records(load_fixture('alkanes_bp'))
        run = RunConfig(
            task='regress', dataset='alkanes_bp',
            ansatz=AnsatzConfig(gate_2q='CRX', entanglement='Full', layers=4),
            max_iters=2000, n_restarts=10, k_folds=2, seed=7)
        s = run_experiment(run, data).summary()
        assert s['train']['median'] >= 0.9
