import numpy as np
from sklearn.metrics import accuracy_score, r2_score

from ..base.errors import (
    ConstantTargetError, SingleClassFoldError, WidthMismatchError)
from ..base.mixins import LoggerMixin
from ..simcore import expectation, run_batch
from ..utils import minmax_scale
from .optimizer import minimize


__all__ = (
    'TargetScaler',
    'VariationalModel',
)


class TargetScaler:
    """
    Min-max scaling of regression targets onto :math:`[-1/2, 1/2]`.

    The range is taken from the training targets and frozen; values outside
    it map outside :math:`[-1/2, 1/2]`.

    """
    LOW, HIGH = -0.5, 0.5

    def __init__(self, targets):
        targets = np.asarray(targets, dtype='float')
        self.lo, self.hi = float(targets.min()), float(targets.max())
        if self.lo == self.hi:
            raise ConstantTargetError(
                "all training targets equal {}; the scaling and R^2 are "
                "undefined".format(self.lo))

    def transform(self, targets):
        return minmax_scale(
            targets, self.lo, self.hi, self.LOW, self.HIGH, clip=False)

    def inverse_transform(self, values):
        return minmax_scale(
            values, self.LOW, self.HIGH, self.lo, self.hi, clip=False)


class VariationalModel(LoggerMixin):
    """
    Encoded states followed by a trainable ansatz and a Z-type observable.

    For classification the training target of a label :math:`y` is
    :math:`t=2y-1` and the prediction is :math:`y=1` iff
    :math:`\\langle H\\rangle > 0`. For regression the targets are scaled onto
    :math:`[-1/2, 1/2]` on the training set and predictions are mapped back.
    The loss is the mean squared difference between
    :math:`\\langle H\\rangle` and the targets in both cases.

    Parameters
    ----------
    ansatz : ParamCircuit

        The trainable block.

    observable : PauliString

        The measured observable; its width must match the ansatz.

    regression : bool, optional

        Whether this is a regressor rather than a binary classifier.

    """
    def __init__(self, ansatz, observable, regression=False):
        if observable.width != ansatz.n_qubits:
            raise WidthMismatchError(
                "observable {} has width {}, ansatz has {} qubits"
                .format(observable, observable.width, ansatz.n_qubits))
        self.ansatz = ansatz
        self.observable = observable
        self.regression = bool(regression)
        self.theta = None
        self.scaler = None
        self.trace = None

    @property
    def n_params(self):
        return self.ansatz.n_params

    def expectations(self, theta, states):
        """ :math:`\\langle H\\rangle` for each encoded state. """
        psi = run_batch(self.ansatz.bind(theta), states)
        return np.atleast_1d(expectation(psi, self.observable))

    def targets(self, y):
        if self.regression:
            return self.scaler.transform(y)
        return 2.0 * np.asarray(y, dtype='float') - 1.0

    def loss(self, theta, states, targets):
        h = self.expectations(theta, states)
        return float(np.mean((h - targets) ** 2))

    def fit(self, states, y, theta0, max_iters=1000, tol=1e-6):
        """
        Minimize the training loss from ``theta0``.

        Returns
        -------
        self

            With ``theta`` (the best point), ``trace`` (best-so-far loss per
            evaluation) and ``final_loss`` set.

        """
        y = np.asarray(y)
        if self.regression:
            self.scaler = TargetScaler(y)
        elif np.unique(y).size < 2:
            raise SingleClassFoldError(
                "training split has a single class: {}".format(y[0]))
        t = self.targets(y)
        self.theta, self.final_loss, self.trace = minimize(
            lambda theta: self.loss(theta, states, t),
            theta0, max_iters=max_iters, tol=tol)
        return self

    def predict(self, states, theta=None):
        h = self.expectations(self.theta if theta is None else theta, states)
        if self.regression:
            return self.scaler.inverse_transform(h)
        return (h > 0).astype('int')

    def score(self, states, y, theta=None):
        """ Accuracy for a classifier, :math:`R^2` for a regressor. """
        y_pred = self.predict(states, theta)
        if self.regression:
            return float(r2_score(y, y_pred))
        return float(accuracy_score(y, y_pred))
