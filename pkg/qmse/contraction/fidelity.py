from ..base.errors import ContractionLayerError
from ..encoder import EncodingParams, encode_molecule
from ..encoder.structure import as_graph
from ..simcore import check_width, fidelity
from .plan import contract_pair, find_common_fragments


__all__ = (
    'contracted_fidelity',
    'direct_fidelity',
)


def direct_fidelity(p, q, params=None, max_qubits=None):
    """
    Fidelity of two structure-encoded molecules on a common register of
    ``max(n_p, n_q)`` qubits, without contraction.

    Returns
    -------
    fidelity, qubits_used : float, int

    """
    params = params or EncodingParams()
    p, q = as_graph(p), as_graph(q)
    width = max(len(p), len(q))
    check_width(width, max_qubits)
    f = fidelity(
        encode_molecule(p, params, width), encode_molecule(q, params, width),
        max_qubits=max_qubits)
    return f, width


def contracted_fidelity(p, q, params=None, max_qubits=None):
    """
    Fidelity of two structure-encoded molecules after eliminating their
    common chain fragments.

    For a single encoding block the contracted fidelity equals the direct
    one exactly: the bond rotations commute, so identical bonds cancel in
    :math:`W_Q^\\dagger W_P`, and an atom whose rotation is identical and
    whose bonds all cancel drops out with a factor of one.

    Parameters
    ----------
    p, q : MolGraph or str

        The molecules (SMILES strings are parsed).

    params : EncodingParams, optional

        The encoding settings; ``layers_x`` must be 1.

    max_qubits : int, optional

        Override of the simulator width cap.

    Returns
    -------
    fidelity, qubits_used : float, int

        The fidelity and the width of the contracted register.

    Raises
    ------
    ContractionLayerError

        If ``params.layers_x != 1``.

    QubitLimitError

        If the contracted register is still wider than the cap.

    """
    params = params or EncodingParams()
    if params.layers_x != 1:
        raise ContractionLayerError(
            "chain contraction is only exact for layers_x=1, got: {}"
            .format(params.layers_x))
    p, q = as_graph(p), as_graph(q)
    plan = find_common_fragments(p, q, params)
    p_small, q_small = contract_pair(p, q, plan)
    width = plan.final_width
    check_width(width, max_qubits)
    f = fidelity(
        encode_molecule(p_small, params, width),
        encode_molecule(q_small, params, width),
        max_qubits=max_qubits)
    return f, width
