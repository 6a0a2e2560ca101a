import logging

import qmse


logging.basicConfig(level=logging.INFO)


records = qmse.cli.load_fixture('alkanes_bp')
data = qmse.vqml.Dataset.from_records(records)

# boiling points (K) of ten small molecules, CRX-full ansatz
run = qmse.RunConfig(
    task='regress',
    dataset='alkanes_bp',
    ansatz=qmse.AnsatzConfig(gate_2q='CRX', entanglement='Full', layers=4),
    max_iters=2000,
    n_restarts=10,
    k_folds=2,
    seed=7)

result = qmse.run_experiment(run, data, n_jobs=4)

s = result.summary()
print("train R^2: {:.3f} [{:.3f}, {:.3f}]".format(
    s['train']['median'], s['train']['p16'], s['train']['p84']))
print("test R^2:  {:.3f} [{:.3f}, {:.3f}]".format(
    s['test']['median'], s['test']['p16'], s['test']['p84']))

with open('regress_boiling_points.json', 'w') as f:
    f.write(result.to_json())


# the same config for a range of ansatz depths
for layers, r in qmse.vqml.run_layer_sweep(
        run.replace(n_restarts=3, max_iters=500), data, n_jobs=4).items():
    print("layers={}: {!r}".format(layers, r))
