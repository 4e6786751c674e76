from .clique import all_maximal_cliques, clique_number, max_clique
from .colouring import DEFAULT_COLOUR_LIMIT, InstanceTooLarge, ProperColouring, chromatic_number
from .fractional import (
    DEFAULT_FRACTIONAL_LIMIT,
    FractionalColouring,
    fractional_chromatic,
    maximal_stable_sets,
    weighted_fractional_chromatic,
)
from .lp import LPError, solve_cover
from .matching import (
    InconsistentResult,
    joined_graph,
    matching_number,
    pairwise_joined_matching_number,
    tutte_berge_verify,
)
from .strong import (
    DEFAULT_STRONG_LIMIT,
    fractional_strong_chromatic_index,
    fractional_strong_chromatic_index_direct,
    fractional_strong_colouring,
    strong_chromatic_index,
    strong_clique_number,
)
from .vizing import colour_classes, is_proper_edge_colouring, vizing_edge_colouring

__all__ = [
    "DEFAULT_COLOUR_LIMIT",
    "DEFAULT_FRACTIONAL_LIMIT",
    "DEFAULT_STRONG_LIMIT",
    "FractionalColouring",
    "InconsistentResult",
    "InstanceTooLarge",
    "LPError",
    "ProperColouring",
    "all_maximal_cliques",
    "chromatic_number",
    "clique_number",
    "colour_classes",
    "fractional_chromatic",
    "fractional_strong_chromatic_index",
    "fractional_strong_chromatic_index_direct",
    "fractional_strong_colouring",
    "is_proper_edge_colouring",
    "joined_graph",
    "matching_number",
    "max_clique",
    "maximal_stable_sets",
    "pairwise_joined_matching_number",
    "solve_cover",
    "strong_chromatic_index",
    "strong_clique_number",
    "tutte_berge_verify",
    "vizing_edge_colouring",
    "weighted_fractional_chromatic",
]
