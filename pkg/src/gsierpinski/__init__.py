"""Generalized Sierpinski graphs S(G,t): explicit construction and exact
closed forms for the degree sequence and general first Zagreb index."""

from .base_graph import (
    BaseGraph,
    DegreeClasses,
    base_zagreb,
    degree_classes,
    parse_edge_list,
    serialize_edge_list,
)
from .closed_form import (
    DegreeHistogram,
    ZagrebTable,
    degree_histogram_closed,
    edge_count,
    first_zagreb,
    forgotten_index,
    max_degree,
    min_degree,
    tree_leaf_count,
    vertex_count,
    zagreb_closed,
)
from .core import (
    SierpinskiParams,
    Word,
    degree_of,
    enumerate_edges,
    format_word,
    is_edge,
    neighbors,
    word_rank,
    word_unrank,
)
from .errors import *  # noqa: F403
from .verify import CrossCheckReport, cross_check, histogram_bruteforce, zagreb_bruteforce

__version__ = "0.1.0"
