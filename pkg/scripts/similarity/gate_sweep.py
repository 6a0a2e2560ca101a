import qmse


# a small set of C4-C7 alkanes, linear and branched
alkanes = [
    'CCCC', 'CC(C)C', 'CCCCC', 'CC(C)CC', 'CC(C)(C)C',
    'CCCCCC', 'CC(C)CCC', 'CCC(C)CC', 'CC(C)(C)CC', 'CCCCCCC',
]

fatty_acids = [r.smiles for r in qmse.cli.load_fixture('fattyacids')]


def sweep(name, molecules, contract):
    matrices = qmse.similarity.gate_sweep(molecules, contract=contract)
    variances = {gate: m.variance() for gate, m in matrices.items()}
    print("{}: {}".format(name, ', '.join(
        '{} {:.4g}'.format(gate, v) for gate, v in variances.items())))
    return variances


v_alkanes = sweep('alkanes', alkanes, contract=False)
v_fatty_acids = sweep('fatty acids', fatty_acids, contract=True)

# the XX bond rotation spreads the fidelities more than the ZZ one
assert v_alkanes['Rxx'] > v_alkanes['Rzz']
assert v_fatty_acids['Rxx'] > v_fatty_acids['Rzz']
