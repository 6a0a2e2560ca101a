import numpy as np
import qmse


# the two geometries of but-2-ene and the plain (stereo-free) form
molecules = {
    'E': 'C/C=C/C',
    'Z': 'C/C=C\\C',
    'plain': 'CC=CC',
}


for name, smiles in molecules.items():
    g = qmse.parse_smiles(smiles)
    matrix = qmse.encoder.build_matrix(g)
    print("{} ({}):".format(name, smiles))
    print(matrix.entries)
    print(qmse.encoder.encode_molecule(g))
    print()


# the Z isomer only differs in the sign of the double-bond angle
states = {
    name: qmse.simcore.run(qmse.encoder.encode_molecule(
        qmse.parse_smiles(smiles)))
    for name, smiles in molecules.items()}

for a, b in [('E', 'Z'), ('E', 'plain'), ('Z', 'plain')]:
    f = qmse.simcore.fidelity(states[a], states[b])
    print("F({}, {}) = {:.6f}".format(a, b, f))

assert np.isclose(qmse.simcore.fidelity(states['E'], states['plain']), 1)
