import pytest

from ..base.errors import GraphCheckError
from .graph import Atom, Bond, BondStereo, MolGraph
from .smiles import parse_smiles


def test_bond_normalizes_endpoints():
    assert Bond(3, 1).pair == (1, 3)
    assert Bond(3, 1) == Bond(1, 3)


@pytest.mark.parametrize('kwargs', [
    dict(a=1, b=1),
    dict(a=0, b=1, order=4),
    dict(a=0, b=1, order=1, ez_flag=BondStereo.E),
])
def test_bond_invariants(kwargs):
    with pytest.raises(GraphCheckError):
        Bond(**kwargs)


def test_atom_invariants():
    with pytest.raises(GraphCheckError):
        Atom(0)


def test_graph_rejects_bad_bonds():
    with pytest.raises(GraphCheckError):
        MolGraph([Atom(6), Atom(6)], [Bond(0, 2)])
    with pytest.raises(GraphCheckError):
        MolGraph([Atom(6), Atom(6)], [Bond(0, 1), Bond(1, 0)])


def test_relabel_and_canonical_key():
    g = parse_smiles('CCO')
    h = g.relabel([2, 0, 1])
    assert [a.atomic_number for a in h.atoms] == [8, 6, 6]
    assert h.bond(0, 2).order == 1
    assert g.canonical_key() == h.canonical_key()
    assert g.canonical_key() != parse_smiles('COC').canonical_key()


def test_subgraph_may_be_disconnected():
    g = parse_smiles('CCCC')
    h = g.subgraph([0, 1, 3])
    assert len(h) == 3
    assert [b.pair for b in h.bonds] == [(0, 1)]
    assert not h.is_connected()


def test_signature_ignores_source():
    assert parse_smiles('CC').signature() == MolGraph(
        [Atom(6), Atom(6)], [Bond(0, 1)]).signature()
    assert parse_smiles('CC').signature() != parse_smiles('CO').signature()
