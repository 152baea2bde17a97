"""Provenance recovery for network-coded edge embedding.

Forwarding nodes add the signature of their outgoing edge into a shared
provenance field; the destination recovers the traversed path by solving a
sparse-recovery problem whose solution must also form a path. This package
provides the embedding model, the path-structure checks, a family of
list-based and path-aware OMP solvers, and a Monte Carlo simulation harness.
"""

from .network import (
    NetworkConfig,
    PathVector,
    Provenance,
    SignatureMatrix,
    column_to_edge,
    edge_to_column,
    embed_provenance,
    generate_signatures,
    sample_path,
)
from .numerics import ResidualState, beta_argmax, correlations, project_residual
from .pathcheck import (
    MissingLinkResult,
    MissingLinkStatus,
    ReachMatrices,
    adjacency,
    brute_force_path_oracle,
    complete_path,
    find_length,
    is_path,
    lift,
    missing_link_check,
    reach_matrices,
)
from .solvers import (
    GompParams,
    RecoveryResult,
    SupportSet,
    candidate_residue,
    exhaustive_oracle,
    g_omp,
    gamma_omp,
    l_gomp,
    l_omp,
    pl_omp,
    vanilla_omp,
)
from .harness import (
    ComplexityEstimate,
    ErrorRateReport,
    ErrorRateRow,
    ExperimentSpec,
    complexity_estimate,
    run_trials,
    write_csv,
)

__version__ = "0.1.0"
