"""Non-backtracking-centrality random walks on undirected graphs.

Transition matrices, stationary distributions, and exact hitting times for
the unbiased walk, the maximal-entropy walk, and the non-backtracking
centrality biased walk, with cross-validating oracles.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceFailureError, InvalidParamsError, NbwalkError, NotConnectedError,
    ParseError, TreeGraphError, ZeroDenominatorError,
)
from .graph import (
    Graph, GraphValidation, WeightedGraph, laplacian, parse_edge_list, validate,
    weighted_from_centrality, weighted_laplacian,
)
from .hitting import (
    HittingReport, eq26_audit, hitting_linear, hitting_spectral, hitting_spectral_merw,
    hitting_spectral_nbcrw, hitting_spectral_turw, hub_node, hub_report,
)
from .models import (
    RoseOracle4, RoseSpec, gen_ba, gen_er, gen_ws, loglog_slope, make_rose, rose4_oracle,
    scaling_table,
)
from .nbcentrality import NbCentrality, NbMatrix, build_m_matrix, build_nb_matrix, nb_centrality, verify_b_vs_m
from .simulate import SimConfig, SimResult, simulate_hitting, simulate_stationary
from .spectral import LeadingEigenpair, SpectralDecomposition, leading_eig, sym_eig
from .walks import (
    StationaryDistribution, TransitionMatrix, WalkKind, detailed_balance_residual, ipr,
    merw_transition, nbcrw_transition, stationary_closed, stationary_generic, transition,
    turw_transition,
)
