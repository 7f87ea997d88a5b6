"""
Graph representation, ingestion and brute-force oracles
"""

from .models import OrientationCount
from .operations import (
    all_labeled_graphs,
    isomorphism_class_representatives,
    random_graph,
    random_permutation,
    relabel,
)
from .oracles import (
    chromatic_class_signature,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_colorings,
    is_stable,
)
from .parsers import encode_graph6, format_edge_list, load_graph, parse_edge_list, parse_graph6

__all__ = [
    'OrientationCount',
    'all_labeled_graphs', 'isomorphism_class_representatives', 'random_graph', 'random_permutation', 'relabel',
    'chromatic_class_signature', 'chromatic_polynomial', 'count_acyclic_orientations',
    'count_colorings', 'is_stable',
    'encode_graph6', 'format_edge_list', 'load_graph', 'parse_edge_list', 'parse_graph6',
]
