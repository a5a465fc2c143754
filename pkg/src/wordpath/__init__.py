"""Word-adjacency network growth and average shortest path length toolkit.

Builds word-adjacency networks from raw text, simulates several families of
growing-network models, and tracks how the average shortest path length
evolves with network size, with supporting statistical fits and a CLI.
"""

from ._rng import SplitMix64, derive_seed
from .aspl import (
    AsplCurve,
    CurvePoint,
    all_pairs_distances,
    aspl_exact,
    aspl_sampled,
    average_curves,
    default_schedule,
    track_growth,
)
from .errors import CorruptStreamError, DisconnectedGraphError, InsufficientDataError
from .events import EdgeAdded, EdgeRewired, EventTape, NodeAdded, tape_from_text
from .fits import (
    ErApproxFit,
    HeapsFit,
    alpha_from_delta,
    delta_from_alpha,
    fit_er_approx,
    fit_heaps,
    fronczak_limit,
)
from .graph import (
    Graph,
    PreferentialSampler,
    chain_graph,
    complete_graph,
    degree_exponent,
    sample_edge_pair,
    sample_preferential,
    star_graph,
)
from .kernels import backend_name
from .models import (
    DmParams,
    HybridParams,
    ShParams,
    dm_expected_edges,
    dm_grow,
    hybrid_grow,
    replay,
    sh_grow,
)
from .pipeline import (
    build_adjacency,
    curve_for_text,
    piece_ensemble,
    surrogate_comparison,
)
from .tokens import TokenStream, shuffle_stream, split_pieces, tokenize, tokenize_file

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
