import logging

from ..base.errors import StalePlanError
from ..base.mixins import SerializableMixin
from ..encoder import EncodingParams, build_matrix


__all__ = (
    'ContractionPlan',
    'contract_pair',
    'find_common_fragments',
)


class ContractionPlan(SerializableMixin):
    """
    Which common chain fragments to eliminate from a pair of molecules.

    Qubit ``i`` of one molecule faces qubit ``i`` of the other in the
    fidelity, so a fragment is only removable if it sits at the same atom
    indices in both molecules. The removed index ranges are therefore shared
    by the two molecules.

    Parameters
    ----------
    removed_segments : list of (int, int)

        Inclusive ``(start, end)`` atom-index ranges of the removed interiors.

    boundaries : list of (int, int)

        The kept boundary atoms ``(alpha, beta)`` of each segment.

    kept_p, kept_q : dict

        Maps from old to new atom index for the kept atoms of each molecule.

    width_before : int

        The register width without contraction, ``max(n_p, n_q)``.

    signature_p, signature_q : str

        Graph signatures of the two molecules the plan was built for.

    segment_tokens : list of str, optional

        The bond/atom token run of each removed interior, including the two
        boundary bonds. Identical in both molecules by construction.

    """
    def __init__(
            self,
            removed_segments,
            boundaries,
            kept_p,
            kept_q,
            width_before,
            signature_p,
            signature_q,
            segment_tokens=()):

        self.removed_segments = [tuple(s) for s in removed_segments]
        self.boundaries = [tuple(b) for b in boundaries]
        self.kept_p = {int(k): int(v) for k, v in dict(kept_p).items()}
        self.kept_q = {int(k): int(v) for k, v in dict(kept_q).items()}
        self.width_before = int(width_before)
        self.signature_p = signature_p
        self.signature_q = signature_q
        self.segment_tokens = list(segment_tokens)

    @property
    def final_width(self):
        return max(len(self.kept_p), len(self.kept_q))

    @property
    def num_removed(self):
        return sum(end - start + 1 for start, end in self.removed_segments)

    @property
    def qubits_saved(self):
        return self.width_before - self.final_width

    @property
    def is_empty(self):
        return not self.removed_segments

    def __repr__(self):
        return (
            "ContractionPlan(segments={}, width_before={}, final_width={})"
            .format(self.removed_segments, self.width_before,
                    self.final_width))

    def to_dict(self):
        return {
            'removed_segments': [list(s) for s in self.removed_segments],
            'boundaries': [list(b) for b in self.boundaries],
            'segment_tokens': list(self.segment_tokens),
            'kept_p': {str(k): v for k, v in sorted(self.kept_p.items())},
            'kept_q': {str(k): v for k, v in sorted(self.kept_q.items())},
            'width_before': self.width_before,
            'final_width': self.final_width,
            'qubits_saved': self.qubits_saved,
            'signature_p': self.signature_p,
            'signature_q': self.signature_q,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            removed_segments=d['removed_segments'],
            boundaries=d['boundaries'],
            kept_p=d['kept_p'],
            kept_q=d['kept_q'],
            width_before=d['width_before'],
            signature_p=d['signature_p'],
            signature_q=d['signature_q'],
            segment_tokens=d.get('segment_tokens', ()))


def _removable(k, p, q, mp, mq):
    # an unbranched chain atom whose rotation and both bonds are the same
    # in the two molecules
    if p.degree(k) != 2 or q.degree(k) != 2:
        return False
    if p.neighbors(k) != q.neighbors(k):
        return False
    if p.atoms[k] != q.atoms[k] or mp[k, k] != mq[k, k]:
        return False
    for j in p.neighbors(k):
        if p.bond(k, j) != q.bond(k, j) or mp[k, j] != mq[k, j]:
            return False
    return True


def _runs(g, atoms):
    runs = []
    for k in sorted(atoms):
        if runs and runs[-1][-1] == k - 1 and g.bond(k - 1, k) is not None:
            runs[-1].append(k)
        else:
            runs.append([k])
    return runs


def _external(g, run):
    members = set(run)
    return sorted({j for k in run for j in g.neighbors(k)} - members)


def _segment_tokens(g, run, alpha, beta):
    path = [alpha] + list(run) + [beta]
    parts = []
    for a, b in zip(path[:-1], path[1:]):
        parts.append(str(g.bond(a, b)))
        if b != beta:
            parts.append(str(g.atoms[b]))
    return ''.join(parts)


def find_common_fragments(p, q, params=None):
    """
    Find the common chain fragments of two molecules that can be eliminated
    without changing their fidelity.

    An interior atom ``k`` is removable if, in both molecules, it has exactly
    two neighbors (the same two), the same atom and diagonal matrix value,
    and identical bonds to both neighbors. Maximal runs of index-consecutive,
    bonded removable atoms form the removed segments. A run must be attached
    to the rest of the molecule through exactly two kept boundary atoms
    :math:`\\alpha` and :math:`\\beta`; runs closing a ring are skipped.

    Parameters
    ----------
    p, q : MolGraph

        The two molecules, in the atom order used for encoding.

    params : EncodingParams, optional

        The encoding settings used to compare matrix values.

    Returns
    -------
    plan : ContractionPlan

        The plan. It is empty if nothing qualifies.

    """
    params = params or EncodingParams()
    mp = build_matrix(p, params).entries
    mq = build_matrix(q, params).entries
    n = min(len(p), len(q))
    candidates = {k for k in range(n) if _removable(k, p, q, mp, mq)}

    # drop runs that aren't interior path fragments until nothing changes
    changed = True
    while changed:
        changed = False
        for run in _runs(p, candidates):
            external = _external(p, run)
            if len(external) != 2 or any(j in candidates for j in external):
                candidates.difference_update(run)
                changed = True

    segments, boundaries, tokens = [], [], []
    for run in _runs(p, candidates):
        if len(run) == 1:
            alpha, beta = _external(p, run)
        else:
            alpha, = [j for j in p.neighbors(run[0]) if j not in run]
            beta, = [j for j in p.neighbors(run[-1]) if j not in run]
        segments.append((run[0], run[-1]))
        boundaries.append((alpha, beta))
        tokens.append(_segment_tokens(p, run, alpha, beta))

    kept_p = [k for k in range(len(p)) if k not in candidates]
    kept_q = [k for k in range(len(q)) if k not in candidates]
    plan = ContractionPlan(
        removed_segments=segments,
        boundaries=boundaries,
        kept_p={old: new for new, old in enumerate(kept_p)},
        kept_q={old: new for new, old in enumerate(kept_q)},
        width_before=max(len(p), len(q)),
        signature_p=p.signature(),
        signature_q=q.signature(),
        segment_tokens=tokens)
    logging.getLogger('find_common_fragments').debug(
        "%s vs %s: removing %d atoms in %d segment(s), width %d -> %d",
        p.source, q.source, plan.num_removed, len(segments),
        plan.width_before, plan.final_width)
    return plan


def contract_pair(p, q, plan):
    """
    Apply a contraction plan.

    Each removed interior is deleted. Its boundary atoms stay, with their own
    rotation and their bonds to the retained flanks, but are no longer
    connected through the removed fragment.

    Parameters
    ----------
    p, q : MolGraph

        The molecules the plan was built for.

    plan : ContractionPlan

        The output of :func:`find_common_fragments`.

    Returns
    -------
    p, q : MolGraph

        The reduced graphs; the inputs themselves if the plan is empty.

    Raises
    ------
    StalePlanError

        If the graphs differ from the ones the plan was built for.

    """
    if p.signature() != plan.signature_p or q.signature() != plan.signature_q:
        raise StalePlanError(
            "contraction plan was built for different molecules than {!r} "
            "and {!r}".format(p.source, q.source))
    if plan.is_empty:
        return p, q
    return p.subgraph(plan.kept_p), q.subgraph(plan.kept_q)
