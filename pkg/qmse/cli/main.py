import argparse
import json
import logging
import sys

from ..base.errors import DatasetError, QMSEError
from ..contraction import (
    contracted_fidelity, direct_fidelity, find_common_fragments)
from ..encoder import EncodingParams, build_matrix, build_qmse_circuit
from ..molgraph import parse_smiles
from ..similarity import fidelity_matrix, tanimoto_matrix
from ..vqml import Dataset, RunConfig, Task, run_experiment
from .fixtures import list_fixtures, load_fixture
from .ingest import load_dataset


__all__ = (
    'main',
)


LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def round_floats(obj, digits=12):
    """ Round every float in a JSON-like structure to ``digits`` significant
    digits. """
    if isinstance(obj, float):
        return float('{:.{}g}'.format(obj, digits))
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    return obj


def dump_json(obj):
    return json.dumps(round_floats(obj), indent=2, sort_keys=True)


def _encoding_params(args):
    gate_1q, gate_2q = _split_gates(args.gates)
    return EncodingParams(
        d=args.d, use_stereo=not args.no_stereo, gate_1q=gate_1q,
        gate_2q=gate_2q, layers_x=args.layers)


def _split_gates(text):
    parts = [s.strip() for s in str(text).split(',')]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            "--gates expects two comma-separated gates, e.g. ry,rxx; got: {!r}"
            .format(text))
    return parts


def cmd_parse(args):
    g = parse_smiles(args.smiles)
    return dump_json({
        'smiles': g.source,
        'atoms': [
            {'index': i,
             'symbol': atom.symbol,
             'atomic_number': atom.atomic_number,
             'tetra_parity': atom.epsilon_t if atom.tetra_parity else None}
            for i, atom in enumerate(g.atoms)],
        'bonds': [
            {'pair': list(bond.pair),
             'order': bond.order,
             'stereo': bond.ez_flag.name if bond.ez_flag else None}
            for bond in g.bonds]})


def cmd_encode(args):
    params = _encoding_params(args)
    matrix = build_matrix(parse_smiles(args.smiles), params)
    circuit = build_qmse_circuit(matrix, params)
    return dump_json({
        'smiles': args.smiles,
        'params': params.to_dict(),
        'matrix': matrix.to_dict(),
        'circuit': circuit.to_dict()})


def cmd_fidelity(args):
    params = _encoding_params(args)
    func = contracted_fidelity if args.contract else direct_fidelity
    f, qubits = func(args.a, args.b, params, max_qubits=args.max_qubits)
    return dump_json({
        'a': args.a, 'b': args.b, 'contract': args.contract,
        'fidelity': f, 'qubits': qubits})


def cmd_contract(args):
    params = _encoding_params(args)
    plan = find_common_fragments(
        parse_smiles(args.a), parse_smiles(args.b), params)
    d = plan.to_dict()
    d.update({'a': args.a, 'b': args.b})
    return dump_json(d)


def cmd_matrix(args):
    records = load_dataset(args.dataset, require_values=False)
    smiles = [r.smiles for r in records]
    labels = [r.name for r in records]
    if args.kind == 'tanimoto':
        m = tanimoto_matrix(
            smiles, nbits=args.nbits, max_path=args.max_path, labels=labels)
    else:
        m = fidelity_matrix(
            smiles, _encoding_params(args), contract=args.contract,
            max_qubits=args.max_qubits, labels=labels, n_jobs=args.n_jobs)
    if args.qubits_output and m.qubits is not None:
        m.qubits_to_csv(args.qubits_output)
    if args.format == 'csv':
        return m.to_csv().rstrip('\n')
    if args.format == 'grid':
        return m.to_grid().rstrip('\n')
    return dump_json(m.to_dict())


def _run_config(args, task):
    if args.config:
        try:
            with open(args.config) as f:
                run = RunConfig.from_json(f.read())
        except FileNotFoundError:
            raise DatasetError("no such config file: {}".format(args.config))
        except json.JSONDecodeError as e:
            raise DatasetError(
                "config {} is not valid JSON: {}".format(args.config, e))
    else:
        run = RunConfig(task=task)
    overrides = {'task': task.value, 'dataset': args.dataset}
    if args.seed is not None:
        overrides['seed'] = args.seed
    return run.replace(**overrides)


def cmd_train(args, task):
    run = _run_config(args, task)
    data = Dataset.from_records(load_dataset(args.dataset))
    result = run_experiment(run, data, n_jobs=args.n_jobs)
    if args.losses:
        result.loss_frame().to_csv(
            args.losses, index=False, float_format='%.12g')
    return dump_json(result.to_dict())


def cmd_fixtures(args):
    return dump_json({
        'fixtures': [
            {'name': name, 'num_records': len(load_fixture(name))}
            for name in list_fixtures()]})


def _add_encoding_args(p):
    p.add_argument('--d', type=float, default=3.0,
                   help="exponent of the atomic number on the diagonal")
    p.add_argument('--gates', default='ry,rxx',
                   help="atom and bond rotations, e.g. ry,rzz")
    p.add_argument('--layers', type=int, default=1,
                   help="number of encoding blocks")
    p.add_argument('--no-stereo', action='store_true',
                   help="ignore E/Z and tetrahedral signs")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='qmse',
        description="Quantum molecular structure encoding: encode, compare "
                    "and learn on molecules given as SMILES.")
    parser.add_argument('--seed', type=int, default=None,
                        help="base seed for training runs")
    parser.add_argument('--log-level', default='WARNING',
                        type=str.upper, choices=LOG_LEVELS)
    parser.add_argument('--max-qubits', type=int, default=None,
                        help="override of the simulator width cap")
    parser.add_argument('--json-errors', action='store_true',
                        help="report errors as JSON on stderr")
    parser.add_argument('--output', '-o', default=None,
                        help="write the primary output to this file")
    parser.add_argument('--format', default='json',
                        choices=('json', 'csv', 'grid'),
                        help="output format of similarity matrices")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('parse', help="dump the molecular graph")
    p.add_argument('smiles')
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser('encode', help="coupling matrix and encoding circuit")
    p.add_argument('smiles')
    _add_encoding_args(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser('fidelity', help="fidelity of two molecules")
    p.add_argument('a')
    p.add_argument('b')
    p.add_argument('--contract', action='store_true',
                   help="eliminate common chain fragments first")
    _add_encoding_args(p)
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser('contract', help="report the common chain fragments")
    p.add_argument('a')
    p.add_argument('b')
    _add_encoding_args(p)
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser('matrix', help="pairwise similarity matrix")
    p.add_argument('dataset', help="fixture name or dataset file")
    p.add_argument('--kind', default='fidelity',
                   choices=('fidelity', 'tanimoto'))
    p.add_argument('--contract', action='store_true')
    p.add_argument('--nbits', type=int, default=2048)
    p.add_argument('--max-path', type=int, default=7)
    p.add_argument('--n-jobs', type=int, default=None)
    p.add_argument('--qubits-output', default=None,
                   help="write the per-pair qubit counts to this CSV file")
    _add_encoding_args(p)
    p.set_defaults(func=cmd_matrix)

    for task in Task:
        p = sub.add_parser(task.value, help="{} with cross validation".format(
            'variational classification' if task is Task.CLASSIFY
            else 'variational regression'))
        p.add_argument('dataset', help="fixture name or dataset file")
        p.add_argument('--config', default=None, help="run config JSON file")
        p.add_argument('--losses', default=None,
                       help="write the loss traces to this CSV file")
        p.add_argument('--n-jobs', type=int, default=None)
        p.set_defaults(func=lambda args, task=task: cmd_train(args, task))

    p = sub.add_parser('fixtures', help="list the bundled datasets")
    p.set_defaults(func=cmd_fixtures)
    return parser


def _report_error(e, json_errors):
    if json_errors:
        d = {'error': e.__class__.__name__, 'message': str(e)}
        if getattr(e, 'row_errors', None):
            d['row_errors'] = [
                {'line': line, 'message': msg} for line, msg in e.row_errors]
        print(json.dumps(d, sort_keys=True), file=sys.stderr)
    else:
        print("error: {}".format(e), file=sys.stderr)


def main(argv=None):
    """
    Entry point of the ``qmse`` command.

    Returns
    -------
    exit_code : int

        0 on success, 1 on a data or config error, 2 on a usage error.

    """
    parser = build_parser()
    json_errors = '--json-errors' in (sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if json_errors and e.code:
            print(json.dumps({'error': 'UsageError',
                              'message': 'invalid command line'}),
                  file=sys.stderr)
        return e.code or 0

    logging.basicConfig(
        level=getattr(logging, args.log_level), stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        out = args.func(args)
    except argparse.ArgumentTypeError as e:
        _report_error(e, args.json_errors)
        return 2
    except QMSEError as e:
        _report_error(e, args.json_errors)
        return 1

    if args.output:
        with open(args.output, 'w') as f:
            f.write(out + '\n')
    else:
        print(out)
    return 0
