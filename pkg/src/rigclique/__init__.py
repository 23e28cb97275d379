"""Maximum cliques in random intersection graphs.

A spectral clique search seeded by small witness cliques, the greedy
baselines it is compared against, a seeded ``G(n, m, p)`` sampler that keeps
the label representation, and a Monte Carlo harness producing failure-rate
and clique-fraction curves.
"""

from .algorithms import (
    CliqueResult,
    SpectralConfig,
    enumerate_k_cliques,
    exact_max_clique,
    greedy_clique,
    maximum_clique_bt06,
    mono_clique,
    spectral_max_clique,
)
from .bench import (
    CurvePoint,
    CurveTable,
    ExperimentConfig,
    TrialOutcome,
    emit_plot_script,
    run_sweep,
    run_trial,
)
from .errors import DegenerateTrialError, InputError, SpectralError
from .graph import (
    Graph,
    adjacency_matrix,
    induced_subgraph,
    is_clique,
    neighborhood_of_set,
    neighbors,
    read_edge_list,
    write_edge_list,
)
from .model import (
    LabelRepresentation,
    RigParams,
    Seed,
    edge_probability,
    heaviest_label,
    is_dense_regime,
    project_labels,
    read_labels,
    sample_rig,
    write_labels,
)
from .spectral import SpectralResult, rank_by_x2, second_eigenpair

__version__ = "0.1.0"
