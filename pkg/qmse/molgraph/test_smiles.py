import pytest

from ..base.errors import (
    SmilesParseError, UnbalancedParenthesesError, UnmatchedRingClosureError,
    UnknownAtomSymbolError, DirectionalBondError, DisconnectedSmilesError,
    UnsupportedSmilesFeatureError)
from .graph import BondStereo, TetraParity
from .smiles import parse_smiles


def bond_list(g):
    return [(b.a, b.b, b.order, b.ez_flag) for b in g.bonds]


def test_two_carbons():
    g = parse_smiles('CC')
    assert [a.atomic_number for a in g.atoms] == [6, 6]
    assert bond_list(g) == [(0, 1, 1, None)]


def test_e_but_2_ene():
    g = parse_smiles('C/C=C/C')
    assert [a.atomic_number for a in g.atoms] == [6, 6, 6, 6]
    assert bond_list(g) == [
        (0, 1, 1, None), (1, 2, 2, BondStereo.E), (2, 3, 1, None)]


def test_z_but_2_ene_differs_in_one_flag():
    e = parse_smiles('C/C=C/C')
    z = parse_smiles('C/C=C\\C')
    diff = [(be, bz) for be, bz in zip(e.bonds, z.bonds) if be != bz]
    assert len(diff) == 1
    assert diff[0][0].ez_flag is BondStereo.E
    assert diff[0][1].ez_flag is BondStereo.Z
    assert e.atoms == z.atoms


def test_branch_written_stereo():
    # C(\F)=C/F is the same (E) geometry as F/C=C/F
    assert parse_smiles('F/C=C/F').bonds[1].ez_flag is BondStereo.E
    g = parse_smiles('C(\\F)=C/F')
    assert g.bond(0, 2).ez_flag is BondStereo.E


def test_propanoic_acid():
    g = parse_smiles('OC(=O)CC')
    assert [a.atomic_number for a in g.atoms] == [8, 6, 8, 6, 6]
    assert bond_list(g) == [
        (0, 1, 1, None), (1, 2, 2, None), (1, 3, 1, None), (3, 4, 1, None)]


def test_ring_closure():
    g = parse_smiles('C1CCCCC1')
    assert g.num_atoms == 6
    assert g.num_bonds == 6
    assert g.bond(0, 5).order == 1
    g = parse_smiles('C=1CCC1')
    assert g.bond(0, 3).order == 2


def test_bracket_atoms_and_parity():
    g = parse_smiles('N[C@@H](C)C(=O)O')
    assert g.atoms[1].tetra_parity is TetraParity.PLUS
    assert g.atoms[1].epsilon_t == 1
    g = parse_smiles('N[C@H](C)C(=O)O')
    assert g.atoms[1].tetra_parity is TetraParity.MINUS
    assert g.atoms[1].epsilon_t == -1
    assert all(a.tetra_parity is None for i, a in enumerate(g.atoms) if i != 1)


def test_halogens():
    g = parse_smiles('ClCBr')
    assert [a.atomic_number for a in g.atoms] == [17, 6, 35]


def test_hydrogens_are_implicit():
    assert parse_smiles('[CH4]').num_atoms == 1
    assert parse_smiles('C').num_atoms == 1


@pytest.mark.parametrize('smiles', [
    'C', 'CC', 'OC(=O)CC', 'C/C=C/C', 'CC(C)(C)C', 'C1CCC1', 'N[C@H](C)C=O'])
def test_source_round_trip(smiles):
    assert parse_smiles(smiles).source == smiles


@pytest.mark.parametrize('smiles', ['CCO', 'CC(C)CC(C)(C)C', 'OC(=O)CCC=C'])
def test_acyclic_bond_count(smiles):
    g = parse_smiles(smiles)
    assert g.num_bonds == g.num_atoms - 1
    assert g.is_connected()


@pytest.mark.parametrize('smiles, error', [
    ('C(', UnbalancedParenthesesError),
    ('CC)C', UnbalancedParenthesesError),
    ('C1CC', UnmatchedRingClosureError),
    ('CXC', UnknownAtomSymbolError),
    ('[Xx]', UnknownAtomSymbolError),
    ('C/CC', DirectionalBondError),
    ('CC.CC', DisconnectedSmilesError),
    ('c1ccccc1', UnsupportedSmilesFeatureError),
    ('[H]', UnsupportedSmilesFeatureError),
    ('[NH4+]', UnsupportedSmilesFeatureError),
    ('[13C]', UnsupportedSmilesFeatureError),
    ('[CH3:1]C', UnsupportedSmilesFeatureError),
    ('', SmilesParseError),
    ('C==C', SmilesParseError),
])
def test_parse_errors(smiles, error):
    with pytest.raises(error):
        parse_smiles(smiles)


def test_parse_errors_share_base_class():
    with pytest.raises(SmilesParseError) as info:
        parse_smiles('CC(C')
    assert info.value.smiles == 'CC(C'
    assert info.value.position == 2


def test_error_message_names_the_problem():
    with pytest.raises(UnbalancedParenthesesError, match='unbalanced parentheses'):  # noqa: E501
        parse_smiles('C(')


def test_against_reference_toolkit():
    Chem = pytest.importorskip('rdkit.Chem')
    for smiles in ('OC(=O)CC', 'CC(C)CC(C)(C)C', 'C/C=C/C', 'CC(C)(C)O'):
        ours = parse_smiles(smiles)
        ref = Chem.MolFromSmiles(smiles)
        assert ours.num_atoms == ref.GetNumAtoms()
        assert [a.atomic_number for a in ours.atoms] == [
            a.GetAtomicNum() for a in ref.GetAtoms()]
        ref_bonds = sorted(
            (min(b.GetBeginAtomIdx(), b.GetEndAtomIdx()),
             max(b.GetBeginAtomIdx(), b.GetEndAtomIdx()),
             int(b.GetBondTypeAsDouble()))
            for b in ref.GetBonds())
        assert [(b.a, b.b, b.order) for b in ours.bonds] == ref_bonds


@pytest.mark.parametrize('smiles', ['C((C))C', 'CC((C)C)C'])
def test_branch_directly_inside_branch(smiles):
    with pytest.raises(SmilesParseError, match='directly inside') as info:
        parse_smiles(smiles)
    assert info.value.position == smiles.index('((') + 1


def test_sibling_branches_still_parse():
    assert parse_smiles('CC(C)(C)C').num_atoms == 5
