import json

import pandas as pd
import pytest

from ..vqml import RunConfig
from .main import main, round_floats


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_round_floats():
    assert round_floats({'a': [1 / 3, 2], 'b': 'x'}) == {
        'a': [0.333333333333, 2], 'b': 'x'}


def test_parse(capsys):
    code, out, _ = run_cli(capsys, 'parse', 'C/C=C/C')
    assert code == 0
    d = json.loads(out)
    assert [a['symbol'] for a in d['atoms']] == ['C'] * 4
    assert [b['order'] for b in d['bonds']] == [1, 2, 1]
    assert d['bonds'][1]['stereo'] == 'E'


def test_encode_but_2_ene(capsys):
    code, out, _ = run_cli(capsys, 'encode', 'C/C=C/C')
    assert code == 0
    d = json.loads(out)
    assert d['matrix']['diagonal'] == [108.0] * 4
    assert [b['value'] for b in d['matrix']['bonds']] == [36.0, 18.0, 36.0]
    gates = d['circuit']['gates']
    assert [g['gate'] for g in gates] == ['Ry'] * 4 + ['Rxx'] * 3
    assert [g['angle'] for g in gates] == [108, 108, 108, 108, 36, 18, 36]


def test_encode_options(capsys):
    code, out, _ = run_cli(
        capsys, 'encode', 'CO', '--gates', 'rz,rzz', '--layers', '2',
        '--d', '2')
    assert code == 0
    d = json.loads(out)
    assert d['matrix']['diagonal'] == [18.0, 32.0]
    assert len(d['circuit']['gates']) == 6
    assert d['circuit']['gates'][-1]['gate'] == 'Rzz'


def test_fidelity_identical(capsys):
    for extra in ([], ['--contract']):
        code, out, _ = run_cli(capsys, 'fidelity', 'CCCCO', 'CCCCO', *extra)
        assert code == 0
        assert json.loads(out)['fidelity'] == pytest.approx(1, abs=1e-12)


def test_fidelity_contract_saves_qubits(capsys):
    _, out, _ = run_cli(capsys, 'fidelity', 'OCCCCCN', 'OCCCCCO')
    direct = json.loads(out)
    _, out, _ = run_cli(
        capsys, 'fidelity', 'OCCCCCN', 'OCCCCCO', '--contract')
    contracted = json.loads(out)
    assert direct['qubits'] == 7
    assert contracted['qubits'] == 3
    assert contracted['fidelity'] == pytest.approx(direct['fidelity'],
                                                   abs=1e-9)


def test_contract(capsys):
    code, out, _ = run_cli(capsys, 'contract', 'CCCCCC', 'CCCCCC')
    assert code == 0
    d = json.loads(out)
    assert d['removed_segments'] == [[1, 4]]
    assert d['final_width'] == 2


def test_matrix_formats(capsys):
    code, out, _ = run_cli(capsys, 'matrix', 'alkanes_bp', '--kind',
                           'tanimoto')
    assert code == 0
    d = json.loads(out)
    assert d['kind'] == 'Tanimoto'
    assert len(d['labels']) == 10

    code, out, _ = run_cli(capsys, '--format', 'csv', 'matrix', 'alkanes_bp',
                           '--kind', 'tanimoto')
    assert out.splitlines()[0].startswith('label,methane,ethane')

    code, out, _ = run_cli(capsys, '--format', 'grid', 'matrix', 'alkanes_bp',
                           '--kind', 'tanimoto')
    assert out.startswith('#')


def test_matrix_fatty_acids(capsys):
    code, out, _ = run_cli(
        capsys, 'matrix', 'fattyacids', '--kind', 'tanimoto')
    assert code == 0
    d = json.loads(out)
    assert d['labels'] == ['FA{}'.format(i) for i in range(1, 8)]
    assert len(d['values']) == 7


def test_matrix_contracted_qubits(capsys, tmp_path):
    qubits = str(tmp_path / 'qubits.csv')
    code, out, _ = run_cli(
        capsys, 'matrix', 'alkanes_phase', '--contract',
        '--qubits-output', qubits)
    assert code == 0
    assert json.loads(out)['contract'] is True
    q = pd.read_csv(qubits, index_col=0)
    assert q.shape == (12, 12)
    assert q.loc['hexane', 'octane'] <= 8


def test_fixtures(capsys):
    code, out, _ = run_cli(capsys, 'fixtures')
    assert code == 0
    names = [f['name'] for f in json.loads(out)['fixtures']]
    assert names == ['alkanes_bp', 'alkanes_phase', 'fattyacids']


def test_classify_deterministic(capsys, tmp_path):
    config = tmp_path / 'run.json'
    config.write_text(RunConfig(
        k_folds=2, n_restarts=2, max_iters=20).to_json())
    losses = tmp_path / 'losses.csv'
    outputs = []
    for _ in range(2):
        output = tmp_path / 'result.json'
        code, _, _ = run_cli(
            capsys, '--seed', '3', '--output', str(output), 'classify',
            'alkanes_phase', '--config', str(config), '--losses', str(losses))
        assert code == 0
        outputs.append(output.read_text())
    assert outputs[0] == outputs[1]
    d = json.loads(outputs[0])
    assert d['config']['seed'] == 3
    assert d['config']['dataset'] == 'alkanes_phase'
    assert len(d['restarts']) == 4
    frame = pd.read_csv(losses)
    assert list(frame.columns) == ['fold', 'restart', 'iteration', 'loss']


def test_missing_config(capsys):
    code, out, _ = run_cli(capsys, 'regress', 'alkanes_bp', '--config',
                           '/nonexistent/run.json')
    assert code == 1


class TestErrors:
    def test_parse_error(self, capsys):
        code, out, err = run_cli(capsys, 'parse', 'C(')
        assert code == 1
        assert out == ''
        assert 'unbalanced parentheses' in err

    def test_json_errors(self, capsys):
        code, _, err = run_cli(capsys, '--json-errors', 'parse', 'CX')
        assert code == 1
        d = json.loads(err)
        assert d['error'] == 'UnknownAtomSymbolError'

    def test_qubit_cap(self, capsys):
        code, _, err = run_cli(
            capsys, '--max-qubits', '4', '--json-errors', 'fidelity',
            'CCCCC', 'CCCCO')
        assert code == 1
        assert json.loads(err)['error'] == 'QubitLimitError'

    def test_bad_gates(self, capsys):
        code, _, err = run_cli(capsys, 'encode', 'CC', '--gates', 'ry')
        assert code == 2
        assert 'two comma-separated gates' in err

    def test_unknown_flag(self, capsys):
        code, _, _ = run_cli(capsys, 'parse', 'CC', '--bogus')
        assert code == 2

    def test_bad_config(self, capsys, tmp_path):
        config = tmp_path / 'run.json'
        config.write_text(json.dumps({'layers': 2, 'optimizer': 'adam'}))
        code, _, err = run_cli(
            capsys, 'classify', 'alkanes_phase', '--config', str(config))
        assert code == 1
        assert 'optimizer' in err
