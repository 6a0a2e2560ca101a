import logging

import numpy as np
import qmse


logging.basicConfig(level=logging.INFO)


records = qmse.cli.load_fixture('alkanes_phase')
data = qmse.vqml.Dataset.from_records(records)

# desk-scale version of a CZ-linear classification run
run = qmse.RunConfig(
    task='classify',
    dataset='alkanes_phase',
    ansatz=qmse.AnsatzConfig(gate_2q='CZ', entanglement='Linear', layers=3),
    max_iters=500,
    n_restarts=10,
    k_folds=5,
    seed=13)

results = {
    encoding: qmse.run_experiment(run.replace(encoding=encoding), data,
                                  n_jobs=4)
    for encoding in ('QMSE', 'Fingerprint')}


for encoding, result in results.items():
    s = result.summary()
    print("{:12s} train {:.3f} [{:.3f}, {:.3f}]  test {:.3f} [{:.3f}, {:.3f}]"
          "  final loss {:.4g}".format(
              encoding,
              s['train']['median'], s['train']['p16'], s['train']['p84'],
              s['test']['median'], s['test']['p16'], s['test']['p84'],
              s['final_loss']['median']))
    result.loss_frame().to_csv(
        'losses_{}.csv'.format(encoding.lower()), index=False)
    for r in result.restarts:
        assert np.all(np.diff(r['trace']) <= 0)


qmse_summary = results['QMSE'].summary()
fp_summary = results['Fingerprint'].summary()
print("QMSE reaches a lower median loss than the fingerprint baseline:",
      qmse_summary['final_loss']['median'] <
      fp_summary['final_loss']['median'])
print("QMSE generalizes better than the fingerprint baseline:",
      qmse_summary['test']['median'] > fp_summary['test']['median'])
