"""Star edge-colorings of subcubic multigraphs from 7-color lists."""

from ._core import (
    InputError,
    InvariantFailure,
    Multigraph,
    color_cycle,
    decompose_cactus,
    exhaustive_star_color,
    find_violation,
    fuzz,
    is_star_coloring,
    named_graph,
    named_graph_names,
    random_cubic,
    random_subcubic,
    star_chromatic_index,
    star_edge_color,
)

__all__ = [
    "InputError",
    "InvariantFailure",
    "Multigraph",
    "color_cycle",
    "decompose_cactus",
    "exhaustive_star_color",
    "find_violation",
    "fuzz",
    "is_star_coloring",
    "named_graph",
    "named_graph_names",
    "random_cubic",
    "random_subcubic",
    "star_chromatic_index",
    "star_edge_color",
]
