"""Local, locally accessible and remaining coherence of bipartite quantum states."""
from .coherence import MeasureKind, MeasurementSide, bipartite_rel_coherence, coherence, l1_coherence, rel_ent_coherence
from .correlations import (
    DiscordReport,
    classical_correlation,
    dephased_holevo,
    discord,
    discord_report,
    holevo,
    mutual_information,
)
from .distribution import (
    DistributionReport,
    distribution_report,
    ensemble_accessible_coherence,
    local_accessible_coherence,
    remaining_coherence,
)
from .ensemble_search import (
    DecompositionSpec,
    SearchConfig,
    SearchResult,
    accessible_upper_bound,
    decomposition_from_isometry,
    max_accessible_coherence,
)
from .linalg import eigh, kron, log_base, relative_entropy, trace_norm, von_neumann_entropy
from .states import (
    BipartiteState,
    DensityMatrix,
    Ensemble,
    bell_state,
    conditional_ensemble,
    dephase,
    dephase_side,
    intro_example_state,
    ising_ground_state,
    negativity,
    partial_trace,
    product_plus,
    schmidt_correlated,
)

__version__ = "0.1.0"
