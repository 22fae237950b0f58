"""Graph-topology thermometry.

Builds graphs, diagonalizes their Laplacians, forms Gibbs states, and
computes the quantum and position-measurement Fisher information together
with their low/high-temperature approximations, bounds, coherence, and
Monte Carlo Cramer-Rao checks.
"""

from ._core import (  # noqa: F401
    ApproximationReport,
    ApproximationRow,
    CrbReport,
    DegreeStats,
    EstimationTrial,
    FisherReport,
    Graph,
    MeasurementKind,
    OutcomeSample,
    Spectrum,
    SpectrumLevel,
    SweepResult,
    Table1Row,
    ThermalModel,
    __version__,
    algebraic_connectivity,
    analytic_spectrum,
    approximation_report,
    build_graph,
    cartesian_product,
    coherence_complete,
    coherence_l1_normalized,
    complete_qfi_coherence_identity,
    crb_experiment,
    degree_stats,
    energy_moment,
    energy_weighted,
    energy_weighted_profile,
    fi_high_temperature,
    fi_low_temperature,
    fi_position,
    fi_position_from_derivative,
    fisher_report,
    gibbs_position_matrix,
    ground_state_density,
    is_circulant_labeled,
    is_connected,
    make_spectrum,
    mle_temperature,
    numeric_spectrum,
    position_probabilities,
    qfi,
    qfi_exact_bipartite,
    qfi_exact_complete,
    qfi_high_temperature,
    qfi_high_temperature_bounds,
    qfi_low_temperature,
    ratio_limit,
    read_edge_list,
    sample_outcomes,
    solve_xmax,
    sweep,
    sweep_default,
    table1_report,
    zero_temperature_limit,
)

__all__ = [name for name in dir() if not name.startswith("_")]
