"""Information-entropy gain of social ties and its relation to common friends."""

from .entropy import (
    EntropyDelta,
    InfoSequence,
    delta_on_add_exact,
    delta_on_add_incremental,
    delta_on_remove,
    delta_taylor_approx,
    entropy,
    info_sequence,
    monotonicity_family,
)
from .experiments import (
    aggregate_sweep,
    edge_sweep,
    positiveness,
    strength_cdf,
    tau_vs_clustering_curve,
)
from .generators import GenParams, TuneParams, gen_ba, gen_cnnr, gen_sw, generate, tune_clustering
from .graph import (
    Graph,
    GraphError,
    avg_clustering,
    common_neighbors,
    degree,
    tie_strength,
)

__version__ = "0.1.0"
