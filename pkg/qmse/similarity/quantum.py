import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..base.errors import ContractionLayerError, QubitLimitError
from ..contraction import contracted_fidelity, find_common_fragments
from ..encoder import EncodingParams, QMSEEncoder
from ..encoder.params import TWO_QUBIT_GATES
from ..encoder.structure import as_graph
from ..simcore import check_width
from .matrix import SimilarityKind, SimilarityMatrix
from .tanimoto import _default_labels


__all__ = (
    'fidelity_matrix',
    'gate_sweep',
)


def _pair_task(args):
    i, j, p, q, params, max_qubits = args
    f, width = contracted_fidelity(p, q, params, max_qubits)
    return i, j, f, width


def _check_pairs(graphs, labels, params, contract, max_qubits):
    # fail before any simulation if a pair doesn't fit
    n = len(graphs)
    for i in range(n):
        for j in range(i + 1, n):
            if contract:
                width = find_common_fragments(
                    graphs[i], graphs[j], params).final_width
            else:
                width = max(len(graphs[i]), len(graphs[j]))
            try:
                check_width(width, max_qubits)
            except QubitLimitError as e:
                raise QubitLimitError(
                    "pair ({}, {}): {}".format(labels[i], labels[j], e))


def fidelity_matrix(
        molecules,
        params=None,
        contract=False,
        max_qubits=None,
        labels=None,
        n_jobs=None):
    """
    Pairwise fidelities of structure-encoded molecules.

    All :math:`n(n-1)/2` pairs are evaluated; the diagonal is set to one.

    Parameters
    ----------
    molecules : list of MolGraph or str

        The molecules (SMILES strings are parsed).

    params : EncodingParams, optional

        The encoding settings.

    contract : bool, optional

        Whether to eliminate common chain fragments per pair before
        simulating. Requires ``params.layers_x == 1``.

    max_qubits : int, optional

        Override of the simulator width cap.

    labels : list of str, optional

        Row names. Defaults to each molecule's SMILES.

    n_jobs : int, optional

        Number of worker processes for the contracted pairs. The result
        doesn't depend on it.

    Returns
    -------
    matrix : SimilarityMatrix

        The fidelities, with the register width of every pair in
        ``matrix.qubits``.

    Raises
    ------
    QubitLimitError

        If any pair is wider than the cap. The message names the pair.

    """
    logger = logging.getLogger('fidelity_matrix')
    params = params or EncodingParams()
    graphs = [as_graph(m) for m in molecules]
    labels = _default_labels(graphs, labels)
    if contract and params.layers_x != 1:
        raise ContractionLayerError(
            "chain contraction is only exact for layers_x=1, got: {}"
            .format(params.layers_x))
    n = len(graphs)
    _check_pairs(graphs, labels, params, contract, max_qubits)

    values = np.eye(n)
    qubits = np.zeros((n, n), dtype='int')

    if not contract:
        # idle qubits don't change a fidelity, so one common register serves
        # every pair
        if n > 1:
            encoder = QMSEEncoder(params, max_qubits=max_qubits).fit(graphs)
            states = encoder.states(graphs)
            gram = np.abs(states.conj() @ states.T) ** 2
            for i in range(n):
                for j in range(i + 1, n):
                    values[i, j] = values[j, i] = gram[i, j]
                    qubits[i, j] = qubits[j, i] = max(
                        len(graphs[i]), len(graphs[j]))
    else:
        tasks = [
            (i, j, graphs[i], graphs[j], params, max_qubits)
            for i in range(n) for j in range(i + 1, n)]
        if n_jobs is not None and n_jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=n_jobs) as executor:
                results = list(executor.map(_pair_task, tasks))
        else:
            results = map(_pair_task, tasks)
        for i, j, f, width in results:
            logger.debug(
                "%s vs %s: fidelity %.6g on %d qubits",
                labels[i], labels[j], f, width)
            values[i, j] = values[j, i] = f
            qubits[i, j] = qubits[j, i] = width

    values = np.clip(values, 0.0, 1.0)
    metadata = {'contract': bool(contract)}
    metadata.update(params.to_dict())
    logger.info(
        "evaluated %d pairs with %s+%s",
        n * (n - 1) // 2, metadata['gate_1q'], metadata['gate_2q'])
    return SimilarityMatrix(
        labels, values, SimilarityKind.FIDELITY, metadata=metadata,
        qubits=qubits)


def gate_sweep(
        molecules,
        base=None,
        contract=False,
        max_qubits=None,
        labels=None,
        n_jobs=None):
    """
    Fidelity matrices for every two-qubit bond rotation.

    The atom rotation is fixed to ``Ry`` and a single encoding block is used;
    the other settings come from ``base``.

    Returns
    -------
    matrices : dict

        A :class:`SimilarityMatrix` per bond gate, keyed ``'Rxx'``, ``'Ryy'``
        and ``'Rzz'``.

    """
    base = base or EncodingParams()
    matrices = {}
    for kind in TWO_QUBIT_GATES:
        params = base.replace(gate_1q='Ry', gate_2q=kind.value, layers_x=1)
        matrices[kind.value] = fidelity_matrix(
            molecules, params, contract=contract, max_qubits=max_qubits,
            labels=labels, n_jobs=n_jobs)
    return matrices
