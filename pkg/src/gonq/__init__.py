"""Chip-firing engine for queen's graphs.

Builds queen's, toroidal queen's, and complete graphs; runs chip-firing
moves, Dhar's burning algorithm, and q-reduction; computes divisor ranks,
independence numbers, and gonality; and verifies the bijection between
maximum independent sets and positive-rank divisor classes of gonality
degree.

The hot kernel (fire spread and q-reduction) has a compiled Cython core
with a pure-Python fallback selected at import; ``gonq.BACKEND`` names the
one in use.
"""

from .backend import BACKEND
from .chipfiring import (
    BurnReport,
    Divisor,
    FiringScript,
    apply_script,
    dhar_burn,
    divisor_degree,
    equivalent,
    fire_set,
    is_effective,
    is_legal_firing,
    q_reduce,
)
from .enumeration import CapExceededError
from .gonality import (
    CorrespondenceReport,
    GonalityReport,
    enumerate_positive_rank_classes,
    gonality_exact_small,
    gonality_upper_bound,
    indep_divisor,
    poorest_row_chips,
    queen_gonality_formula,
    row_equitable_representative,
    toroidal_gonality_formula,
    verify_correspondence,
)
from .graphs import (
    EdgeKind,
    Graph,
    GridSpec,
    complete_graph,
    queen_graph,
    toroidal_queen_graph,
)
from .independence import (
    IndependentSet,
    is_independent,
    max_independent_sets,
    queen_alpha_formula,
    toroidal_alpha_formula,
)
from .ranks import RankResult, effective_in_class, has_positive_rank, rank

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BurnReport",
    "CapExceededError",
    "CorrespondenceReport",
    "Divisor",
    "EdgeKind",
    "FiringScript",
    "GonalityReport",
    "Graph",
    "GridSpec",
    "IndependentSet",
    "RankResult",
    "apply_script",
    "complete_graph",
    "dhar_burn",
    "divisor_degree",
    "effective_in_class",
    "enumerate_positive_rank_classes",
    "equivalent",
    "fire_set",
    "gonality_exact_small",
    "gonality_upper_bound",
    "has_positive_rank",
    "indep_divisor",
    "is_effective",
    "is_independent",
    "is_legal_firing",
    "max_independent_sets",
    "poorest_row_chips",
    "q_reduce",
    "queen_alpha_formula",
    "queen_gonality_formula",
    "queen_graph",
    "rank",
    "row_equitable_representative",
    "toroidal_alpha_formula",
    "toroidal_gonality_formula",
    "toroidal_queen_graph",
    "verify_correspondence",
]
