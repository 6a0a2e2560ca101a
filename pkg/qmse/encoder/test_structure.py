import numpy as np
import pytest

from ..base.errors import ConfigError, WidthMismatchError
from ..molgraph import Atom, Bond, BondStereo, MolGraph, parse_smiles
from ..simcore import Circuit, GateKind, run
from .params import EncodingParams
from .structure import (
    QMSEEncoder, build_matrix, build_qmse_circuit, encode_molecule)


def random_tree(rnd, n_atoms):
    atoms = [Atom(int(rnd.choice([6, 6, 6, 7, 8, 9, 16, 17])))
             for _ in range(n_atoms)]
    bonds = []
    for i in range(1, n_atoms):
        order = int(rnd.choice([1, 1, 2, 3]))
        ez = None
        if order == 2:
            ez = [None, BondStereo.E, BondStereo.Z][rnd.randint(3)]
        bonds.append(Bond(int(rnd.randint(i)), i, order, ez))
    return MolGraph(atoms, bonds)


class TestBuildMatrix:
    def test_e_but_2_ene(self):
        m = build_matrix(parse_smiles('C/C=C/C'))
        np.testing.assert_array_equal(m.diagonal, [108, 108, 108, 108])
        assert m.pairs == ((0, 1), (1, 2), (2, 3))
        assert m.bond_values() == [36, 18, 36]
        np.testing.assert_array_equal(m.entries, m.entries.T)
        assert m.entries[0, 2] == m.entries[0, 3] == m.entries[1, 3] == 0

    def test_z_but_2_ene(self):
        m = build_matrix(parse_smiles('C/C=C\\C'))
        np.testing.assert_array_equal(m.diagonal, [108, 108, 108, 108])
        assert m.bond_values() == [36, -18, 36]

    def test_no_stereo(self):
        m = build_matrix(
            parse_smiles('C/C=C\\C'), EncodingParams(use_stereo=False))
        assert m.bond_values() == [36, 18, 36]

    def test_oxygen(self):
        m = build_matrix(parse_smiles('O'))
        np.testing.assert_array_equal(m.entries, [[256]])

    def test_tetra_sign(self):
        m = build_matrix(parse_smiles('C[C@](N)(O)F'))
        assert m.entries[1, 1] == -108
        m = build_matrix(parse_smiles('C[C@@](N)(O)F'))
        assert m.entries[1, 1] == 108

    def test_closed_form_exactness(self):
        rnd = np.random.RandomState(11)
        for _ in range(100):
            g = random_tree(rnd, rnd.randint(1, 12))
            m = build_matrix(g).entries
            expected = np.zeros((len(g), len(g)))
            for i, atom in enumerate(g.atoms):
                expected[i, i] = 0.5 * atom.epsilon_t * \
                    float(atom.atomic_number) ** 3.0
            for b in g.bonds:
                expected[b.a, b.b] = expected[b.b, b.a] = b.epsilon_d * \
                    float(g.atoms[b.a].atomic_number) * \
                    float(g.atoms[b.b].atomic_number) / b.order
            np.testing.assert_array_equal(m, expected)

    def test_stereo_toggle_flips_one_entry(self):
        e = build_matrix(parse_smiles('CC/C=C/CC'))
        z = build_matrix(parse_smiles('CC/C=C\\CC'))
        changed = np.argwhere(np.triu(e.entries != z.entries))
        assert changed.tolist() == [[2, 3]]
        assert e.entries[2, 3] == -z.entries[2, 3]


class TestBuildCircuit:
    def test_e_but_2_ene(self):
        c = encode_molecule(parse_smiles('C/C=C/C'))
        assert [str(g) for g in c] == [
            'Ry(108)[0]', 'Ry(108)[1]', 'Ry(108)[2]', 'Ry(108)[3]',
            'Rxx(36)[0,1]', 'Rxx(18)[1,2]', 'Rxx(36)[2,3]']

    def test_single_carbon(self):
        c = encode_molecule(parse_smiles('C'))
        assert c.n_qubits == 1
        assert [str(g) for g in c] == ['Ry(108)[0]']

    def test_idle_qubits(self):
        c = encode_molecule(parse_smiles('C'), n_qubits=10)
        assert c.n_qubits == 10
        assert [str(g) for g in c] == ['Ry(108)[0]']
        probs = np.abs(run(c).amplitudes) ** 2
        assert np.isclose(probs[0] + probs[1], 1)

    def test_register_too_small(self):
        with pytest.raises(WidthMismatchError):
            encode_molecule(parse_smiles('CCC'), n_qubits=2)

    def test_gate_choice_and_layers(self):
        params = EncodingParams(gate_1q='rz', gate_2q='ryy', layers_x=2)
        c = encode_molecule(parse_smiles('CO'), params)
        assert [g.kind for g in c] == [
            GateKind.RZ, GateKind.RZ, GateKind.RYY] * 2

    def test_gate_count_linearity(self):
        rnd = np.random.RandomState(5)
        for _ in range(30):
            g = random_tree(rnd, rnd.randint(1, 10))
            layers_x = rnd.randint(1, 4)
            c = encode_molecule(g, EncodingParams(layers_x=layers_x))
            assert len(c) == layers_x * (g.num_atoms + g.num_bonds)

    def test_stereo_toggle_flips_one_angle(self):
        e = encode_molecule(parse_smiles('CC/C=C/CC'))
        z = encode_molecule(parse_smiles('CC/C=C\\CC'))
        diff = [(a, b) for a, b in zip(e, z) if a != b]
        assert len(diff) == 1
        assert diff[0][0].angle == -diff[0][1].angle

    def test_permutation_sensitivity(self):
        g = parse_smiles('OCC=C')
        h = g.relabel([3, 2, 1, 0])
        psi_g = run(encode_molecule(g)).amplitudes
        psi_h = run(encode_molecule(h)).amplitudes
        assert not np.allclose(psi_g, psi_h)

    @pytest.mark.parametrize('gate_2q', ['Rxx', 'Ryy', 'Rzz'])
    def test_bond_gates_commute(self, gate_2q):
        rnd = np.random.RandomState(17)
        params = EncodingParams(gate_2q=gate_2q)
        for _ in range(50):
            g = random_tree(rnd, rnd.randint(2, 9))
            c = encode_molecule(g, params)
            psi = run(c).amplitudes
            atom_gates = list(c)[:len(g)]
            bond_gates = list(c)[len(g):]
            for _ in range(10):
                perm = rnd.permutation(len(bond_gates))
                shuffled = Circuit(
                    c.n_qubits, atom_gates + [bond_gates[k] for k in perm])
                assert np.max(np.abs(run(shuffled).amplitudes - psi)) < 1e-10


class TestEncodingParams:
    def test_defaults(self):
        p = EncodingParams()
        assert (p.d, p.use_stereo, p.layers_x) == (3.0, True, 1)
        assert p.gate_1q is GateKind.RY
        assert p.gate_2q is GateKind.RXX

    def test_json(self):
        p = EncodingParams(d=2.5, gate_2q='rzz', layers_x=2)
        assert EncodingParams.from_json(p.to_json()) == p

    @pytest.mark.parametrize('kwargs', [
        {'d': 0}, {'layers_x': 0}, {'gate_1q': 'rxx'}, {'gate_2q': 'cz'}])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            EncodingParams(**kwargs)

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match='unknown'):
            EncodingParams.from_dict({'d': 3.0, 'gates': 'ry'})


class TestQMSEEncoder:
    def test_common_register(self):
        enc = QMSEEncoder().fit(['C', 'CCO', 'CC'])
        assert enc.n_qubits == 3
        states = enc.states(['C', 'CCO'])
        assert states.shape == (2, 8)
        np.testing.assert_allclose(np.linalg.norm(states, axis=1), 1)

    def test_cache(self):
        enc = QMSEEncoder(n_qubits=4)
        assert enc.state('CCC') is enc.state(parse_smiles('CCC'))

    def test_cache_is_bounded(self):
        enc = QMSEEncoder(n_qubits=5, cache_size=2)
        first = enc.state('CC')
        for smiles in ('CCC', 'CCO', 'CCCC'):
            enc.state(smiles)
        assert len(enc._cache) == 2
        assert enc.state('CC') is not first
        np.testing.assert_allclose(enc.state('CC'), first)

    def test_too_wide(self):
        with pytest.raises(WidthMismatchError):
            QMSEEncoder(n_qubits=2).fit(['CCC'])

    def test_circuit_matches_build(self):
        g = parse_smiles('C/C=C/C')
        enc = QMSEEncoder(n_qubits=6)
        assert enc.circuit(g) == build_qmse_circuit(build_matrix(g), None, 6)
