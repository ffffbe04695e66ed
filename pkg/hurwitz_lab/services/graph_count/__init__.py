"""Enhanced graphs, bundle counts on them, presentations and moves."""
from .builders import chain_graph, random_enhanced_graph, standard_graph, tripod, theta_with_leaf
from .counting import (
    BoundaryCondition,
    Coloring,
    boundary_from_labels,
    boundary_holonomies,
    count_boundary,
    count_colored,
)
from .graph import EnhancedGraph, check_spanning_tree, from_edges, genus
from .models import GraphFile, graph_from_document, graph_to_document
from .moves import (
    Move,
    applicable_moves,
    apply_move,
    flip_orientation,
    ihx,
    random_move,
    random_spanning_tree,
    retree,
    reverse_rotation,
)
from .presentation import Presentation, count_homs_presentation, count_homs_surface, presentation

__all__ = [
    "BoundaryCondition",
    "Coloring",
    "EnhancedGraph",
    "GraphFile",
    "Move",
    "Presentation",
    "applicable_moves",
    "apply_move",
    "boundary_from_labels",
    "boundary_holonomies",
    "chain_graph",
    "check_spanning_tree",
    "count_boundary",
    "count_colored",
    "count_homs_presentation",
    "count_homs_surface",
    "flip_orientation",
    "from_edges",
    "genus",
    "graph_from_document",
    "graph_to_document",
    "ihx",
    "presentation",
    "random_enhanced_graph",
    "random_move",
    "random_spanning_tree",
    "retree",
    "reverse_rotation",
    "standard_graph",
    "theta_with_leaf",
    "tripod",
]
