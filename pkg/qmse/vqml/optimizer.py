import logging

import numpy as np
import scipy.optimize

from ..base.errors import DimensionMismatchError, NonFiniteObjectiveError


__all__ = (
    'minimize',
    'select_engine',
)


class _BudgetSpent(Exception):
    pass


def select_engine(d, budget):
    """
    The scipy method that spends ``budget`` evaluations on ``d`` parameters.

    COBYQA needs ``2d + 1`` interpolation points for its first quadratic
    model; smaller budgets go to COBYLA, whose linear models need ``d + 1``.

    """
    return 'COBYQA' if budget > 2 * d + 1 else 'COBYLA'


def _scipy_kwargs(method, budget, tol, rhobeg):
    if method == 'COBYQA':
        options = {
            'maxfev': budget,
            'initial_tr_radius': rhobeg,
            'final_tr_radius': tol}
        return {'options': options}
    return {'tol': tol, 'options': {'maxiter': budget, 'rhobeg': rhobeg}}


def minimize(f, x0, max_iters=1000, tol=1e-6, rhobeg=1.0):
    """
    Derivative-free trust-region minimization.

    The trust radius starts at ``rhobeg`` and the run ends once it has
    shrunk to ``tol`` or once ``max_iters`` objective evaluations have been
    spent. The first evaluation is always at ``x0``.

    The engine is scipy's COBYQA, whose trust region can grow again after
    successful steps. Budgets too small for its first model fall back to
    COBYLA, see :func:`select_engine`.

    Parameters
    ----------
    f : callable

        A deterministic objective ``f(x) -> float``.

    x0 : 1d array, shape: [d]

        The starting point, ``d >= 1``.

    max_iters : positive int, optional

        Evaluation budget.

    tol : float, optional

        Final trust radius.

    rhobeg : float, optional

        Initial trust radius.

    Returns
    -------
    x, fun, trace : 1d array, float, 1d array

        The best point evaluated (the earliest one on ties), its value, and
        the best-so-far value after each evaluation. The trace is therefore
        non-increasing, and ``fun <= f(x0)``.

    Raises
    ------
    NonFiniteObjectiveError

        If the objective returns ``nan`` or ``inf``.

    """
    x0 = np.array(x0, dtype='float').ravel()
    if x0.size < 1:
        raise DimensionMismatchError("cannot minimize over zero parameters")

    best = {'x': x0.copy(), 'f': None}
    trace = []

    def objective(x):
        if len(trace) >= max_iters:
            raise _BudgetSpent
        value = float(f(x))
        if not np.isfinite(value):
            raise NonFiniteObjectiveError(
                "objective returned {} after {} evaluations, at x = {}"
                .format(value, len(trace), np.array2string(np.asarray(x))))
        if best['f'] is None or value < best['f']:
            best['x'] = np.array(x, dtype='float')
            best['f'] = value
        trace.append(best['f'])
        return value

    max_iters = int(max_iters)
    objective(x0)
    budget = max_iters - 1
    if budget > 0:
        method = select_engine(x0.size, budget)
        try:
            message = scipy.optimize.minimize(
                objective, x0, method=method,
                **_scipy_kwargs(method, budget, tol, rhobeg)).message
        except _BudgetSpent:
            message = "evaluation budget spent"
        logging.getLogger('minimize').debug(
            "%s: %s after %d evaluations, best f = %.6g",
            method, message, len(trace), best['f'])

    return best['x'], best['f'], np.array(trace)
