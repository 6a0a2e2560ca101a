# flake8: noqa

# ensure that all submodules are visible
from . import (
    base, utils, molgraph, simcore, encoder, contraction, similarity, vqml,
    cli)

# Expose some commonly used classes to the package root:
from .molgraph import MolGraph, parse_smiles
from .encoder import EncodingParams, QMSEEncoder, FingerprintEncoder
from .contraction import contracted_fidelity, direct_fidelity
from .similarity import SimilarityMatrix, fidelity_matrix, tanimoto_matrix
from .vqml import AnsatzConfig, RunConfig, RunResult, run_experiment
