"""covertower: iterated Z/2-homology covers with certified expansion bounds.

Build the homology double-cover tower of a finite multigraph (the figure-8
seed yields the Cayley graphs of iterated-square quotients of the rank-2
free group), certify Cheeger-constant upper bounds via an explicit fiber
cut, compute exact Cheeger constants by exhaustive search at small scale,
and track Laplacian spectral gaps along the tower.
"""

from .cheeger import (
    CheegerResult,
    Cut,
    cut_ratio,
    exact_cheeger,
    lemma_cut,
    sweep_cut,
    verify_witness,
)
from .cli import RunConfig
from .covers import (
    CoveredGraph,
    DeckElement,
    RegularCoverReport,
    deck_action,
    flip_cotree_orientation,
    verify_regular_cover,
    z2_cover,
)
from .errors import (
    ConvergenceError,
    CovertowerError,
    DegenerateCutError,
    DisconnectedGraphError,
    SizeCapError,
    SpecMismatchError,
    SpectrumError,
    ValidationError,
)
from .multigraph import (
    CoverSpec,
    GraphMetricSummary,
    MultiGraph,
    build_graph,
    degree,
    is_connected,
    metric_summary,
    rank_pi1,
    spanning_tree,
)
from .spectrum import (
    SandwichReport,
    SpectralSummary,
    cheeger_sandwich,
    fiedler_vector,
    full_spectrum,
    laplacian,
    laplacian_eigensystem,
    spectrum_inclusion,
)
from .tower import TowerLevel, TowerReport, iterate_tower

__version__ = "0.1.0"

__all__ = [
    "CheegerResult",
    "ConvergenceError",
    "CoverSpec",
    "CoveredGraph",
    "CovertowerError",
    "Cut",
    "DeckElement",
    "DegenerateCutError",
    "DisconnectedGraphError",
    "GraphMetricSummary",
    "MultiGraph",
    "RegularCoverReport",
    "RunConfig",
    "SandwichReport",
    "SizeCapError",
    "SpecMismatchError",
    "SpectralSummary",
    "SpectrumError",
    "TowerLevel",
    "TowerReport",
    "ValidationError",
    "build_graph",
    "cheeger_sandwich",
    "cut_ratio",
    "deck_action",
    "degree",
    "exact_cheeger",
    "fiedler_vector",
    "flip_cotree_orientation",
    "full_spectrum",
    "is_connected",
    "iterate_tower",
    "laplacian",
    "laplacian_eigensystem",
    "lemma_cut",
    "metric_summary",
    "rank_pi1",
    "spanning_tree",
    "spectrum_inclusion",
    "sweep_cut",
    "verify_regular_cover",
    "verify_witness",
    "z2_cover",
]
