import logging

import qmse


logging.basicConfig(level=logging.INFO)


records = qmse.cli.load_fixture('fattyacids')
smiles = [r.smiles for r in records]
labels = [r.name for r in records]


# classical reference
tanimoto = qmse.tanimoto_matrix(smiles, labels=labels)
print("Tanimoto similarity:")
print(tanimoto.to_frame().round(3))


# structure encoding with chain contraction, one matrix per bond gate
matrices = qmse.similarity.gate_sweep(
    smiles, contract=True, labels=labels, n_jobs=4)

for name, m in matrices.items():
    print("\nRy + {} fidelity (sample variance {:.4g}):"
          .format(name, m.variance()))
    print(m.to_frame().round(3))
    m.to_csv('fatty_acids_{}.csv'.format(name.lower()))
    with open('fatty_acids_{}.grid'.format(name.lower()), 'w') as f:
        f.write(m.to_grid())


print("\nqubits simulated per pair (36 without contraction):")
print(matrices['Rxx'].qubits)
