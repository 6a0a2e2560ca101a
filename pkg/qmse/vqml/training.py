import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd

from ..base.errors import (
    ConfigError, ConstantTargetError, DatasetError, SingleClassFoldError)
from ..base.mixins import SerializableMixin
from ..encoder import FingerprintEncoder, QMSEEncoder
from ..utils import derive_random_state, median_and_band
from .ansatz import build_ansatz
from .config import Encoding, RunConfig, Task, resolve_observable
from .data import Dataset
from .folds import stratified_kfold
from .model import VariationalModel


__all__ = (
    'RunResult',
    'run_experiment',
    'run_layer_sweep',
    'train_vqc',
    'train_vqr',
)


class RunResult(SerializableMixin):
    """
    The outcome of one experiment: a trained model per fold and restart.

    Parameters
    ----------
    config : RunConfig

        The configuration that produced the result.

    n_qubits, n_params : int

        Register width and number of trainable parameters.

    folds : list of dict

        The ``train`` and ``test`` indices of each fold.

    restarts : list of dict

        One entry per (fold, restart), ordered by fold and then restart, with
        keys ``fold``, ``restart``, ``train_score``, ``test_score``,
        ``final_loss``, ``trace`` (best-so-far loss per evaluation) and
        ``theta``.

    """
    def __init__(self, config, n_qubits, n_params, folds, restarts):
        self.config = config
        self.n_qubits = int(n_qubits)
        self.n_params = int(n_params)
        self.folds = [
            {'train': [int(i) for i in f['train']],
             'test': [int(i) for i in f['test']]} for f in folds]
        self.restarts = sorted(
            restarts, key=lambda r: (r['fold'], r['restart']))

    def scores(self, split='train'):
        return np.array([r[split + '_score'] for r in self.restarts])

    @property
    def median_index(self):
        """
        Position of the median model: the one whose training score is
        nearest to the median training score, the earliest on ties.

        """
        scores = self.scores('train')
        finite = np.isfinite(scores)
        if not finite.any():
            return 0
        median = np.median(scores[finite])
        distance = np.where(finite, np.abs(scores - median), np.inf)
        return int(np.argmin(distance))

    def summary(self):
        d = {}
        for split in ('train', 'test'):
            scores = self.scores(split)
            median, lo, hi = median_and_band(scores[np.isfinite(scores)])
            d[split] = {'median': median, 'p16': lo, 'p84': hi}
        losses = np.array([r['final_loss'] for r in self.restarts])
        d['final_loss'] = dict(zip(
            ('median', 'p16', 'p84'), median_and_band(losses)))
        best = self.restarts[self.median_index]
        d['median_model'] = {
            'fold': best['fold'],
            'restart': best['restart'],
            'train_score': best['train_score'],
            'test_score': best['test_score'],
            'theta': list(best['theta'])}
        return d

    def loss_frame(self):
        """
        The loss traces in long format, with columns ``fold``, ``restart``,
        ``iteration`` and ``loss``.

        """
        frames = [
            pd.DataFrame({
                'fold': r['fold'],
                'restart': r['restart'],
                'iteration': np.arange(len(r['trace'])),
                'loss': r['trace']})
            for r in self.restarts]
        if not frames:
            return pd.DataFrame(
                columns=['fold', 'restart', 'iteration', 'loss'])
        return pd.concat(frames, ignore_index=True)

    def __repr__(self):
        s = self.summary()
        return (
            "RunResult(task={!r}, layers={}, train={:.3g}, test={:.3g})"
            .format(self.config.task.value, self.config.ansatz.layers,
                    s['train']['median'], s['test']['median']))

    def to_dict(self):
        return {
            'config': self.config.to_dict(),
            'n_qubits': self.n_qubits,
            'n_params': self.n_params,
            'summary': self.summary(),
            'folds': self.folds,
            'restarts': [
                {'fold': r['fold'],
                 'restart': r['restart'],
                 'train_score': r['train_score'],
                 'test_score': r['test_score'],
                 'final_loss': r['final_loss'],
                 'trace': [float(x) for x in r['trace']],
                 'theta': [float(x) for x in r['theta']]}
                for r in self.restarts],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            RunConfig.from_dict(d['config']), d['n_qubits'], d['n_params'],
            d['folds'], d['restarts'])


def _fit_restart(args):
    (fold, restart, ansatz, observable, regression, states_train, y_train,
     states_test, y_test, theta0, max_iters, tol) = args
    model = VariationalModel(ansatz, observable, regression=regression)
    model.fit(states_train, y_train, theta0, max_iters=max_iters, tol=tol)
    return {
        'fold': fold,
        'restart': restart,
        'train_score': model.score(states_train, y_train),
        'test_score': model.score(states_test, y_test),
        'final_loss': float(model.final_loss),
        'trace': model.trace.tolist(),
        'theta': model.theta.tolist()}


def _as_dataset(run, data):
    if isinstance(data, Dataset):
        return data
    if data is None:
        if run.dataset is None:
            raise ConfigError("no dataset given and none named in the config")
        from ..cli.ingest import load_dataset
        data = load_dataset(run.dataset)
    return Dataset.from_records(data)


def _check_split(y, train, fold, regression):
    y_train = y[train]
    if regression:
        if np.ptp(y_train) == 0:
            raise ConstantTargetError(
                "fold {}: all training targets equal {}"
                .format(fold, y_train[0]))
    elif np.unique(y_train).size < 2:
        raise SingleClassFoldError(
            "fold {}: training split has the single class {}"
            .format(fold, y_train[0]))


def run_experiment(run, data=None, n_jobs=None):
    """
    Train and score a variational model with stratified k-fold cross
    validation.

    Each fold is encoded (the fingerprint PCA is fitted on the training
    split only) and trained from ``run.n_restarts`` initial points drawn
    uniformly from :math:`[-2\\pi, 2\\pi]`. Every restart is seeded by
    ``(run.seed, fold, restart)``, so the result doesn't depend on the order
    in which restarts finish.

    Parameters
    ----------
    run : RunConfig

        The experiment settings.

    data : Dataset or list of records, optional

        The molecules with labels (or targets). If omitted, the dataset named
        in ``run.dataset`` is loaded.

    n_jobs : int, optional

        Number of worker processes for the restarts.

    Returns
    -------
    result : RunResult

    Raises
    ------
    SingleClassFoldError

        If a training split holds a single class.

    ConstantTargetError

        If a training split has constant targets.

    """
    logger = logging.getLogger('run_experiment')
    data = _as_dataset(run, data)
    y = data.targets if run.regression else data.labels
    if y is None:
        raise DatasetError("dataset has no {} for a {} run".format(
            'targets' if run.regression else 'labels', run.task.value))

    n_qubits = run.n_qubits or data.max_atoms
    ansatz = build_ansatz(n_qubits, run.ansatz)
    observable = resolve_observable(run.observable, n_qubits)
    splits = stratified_kfold(
        y, run.k_folds, run.seed, continuous=run.regression)

    if run.encoding is Encoding.QMSE:
        encoder = QMSEEncoder(run.encoding_params, n_qubits).fit(data.graphs)
        all_states = encoder.states(data.graphs)

    tasks = []
    for fold, (train, test) in enumerate(splits):
        _check_split(y, train, fold, run.regression)
        if run.encoding is Encoding.QMSE:
            states_train, states_test = all_states[train], all_states[test]
        else:
            encoder = FingerprintEncoder(
                n_qubits, layers_x=run.encoding_params.layers_x)
            encoder.fit([data.graphs[i] for i in train])
            states_train = encoder.states([data.graphs[i] for i in train])
            states_test = encoder.states([data.graphs[i] for i in test])
        for restart in range(run.n_restarts):
            theta0 = derive_random_state(run.seed, fold, restart).uniform(
                -2 * np.pi, 2 * np.pi, size=ansatz.n_params)
            tasks.append((
                fold, restart, ansatz, observable, run.regression,
                states_train, y[train], states_test, y[test], theta0,
                run.max_iters, run.tol))

    logger.info(
        "%s %s run: %d qubits, %d parameters, %d folds x %d restarts",
        run.encoding.value, run.task.value, n_qubits, ansatz.n_params,
        len(splits), run.n_restarts)

    if n_jobs is not None and n_jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            restarts = list(executor.map(_fit_restart, tasks))
    else:
        restarts = []
        for task in tasks:
            restarts.append(_fit_restart(task))
            r = restarts[-1]
            logger.debug(
                "fold %d restart %d: train %.4g, test %.4g, loss %.4g",
                r['fold'], r['restart'], r['train_score'], r['test_score'],
                r['final_loss'])

    folds = [{'train': train, 'test': test} for train, test in splits]
    return RunResult(run, n_qubits, ansatz.n_params, folds, restarts)


def train_vqc(data, run, n_jobs=None):
    """ :func:`run_experiment` for a classification config. """
    if run.task is not Task.CLASSIFY:
        raise ConfigError("train_vqc needs a classify config, got: {}"
                          .format(run.task.value))
    return run_experiment(run, data, n_jobs=n_jobs)


def train_vqr(data, run, n_jobs=None):
    """ :func:`run_experiment` for a regression config. """
    if run.task is not Task.REGRESS:
        raise ConfigError("train_vqr needs a regress config, got: {}"
                          .format(run.task.value))
    return run_experiment(run, data, n_jobs=n_jobs)


def run_layer_sweep(run, data=None, layers=None, n_jobs=None):
    """
    Repeat an experiment for a range of ansatz depths.

    Parameters
    ----------
    run : RunConfig

        The base settings; its ``layers`` is ignored.

    data : Dataset or list of records, optional

        As in :func:`run_experiment`.

    layers : iterable of int, optional

        The depths. Defaults to 1-5 for classification and 1-6 for
        regression.

    Returns
    -------
    results : dict

        A :class:`RunResult` per depth.

    """
    if layers is None:
        layers = range(1, 7 if run.regression else 6)
    data = _as_dataset(run, data)
    results = {}
    for n_layers in layers:
        cfg = run.replace(layers=int(n_layers))
        results[int(n_layers)] = run_experiment(cfg, data, n_jobs=n_jobs)
        logging.getLogger('run_layer_sweep').info(
            "layers=%d: %r", n_layers, results[int(n_layers)])
    return results
