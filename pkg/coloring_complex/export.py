"""
JSON export of a coloring complex
"""

import json
from typing import Any, Dict

from common.bitsets import chain_to_lists
from coloring_complex.builder import euler_characteristics, f_vector, h_vector
from coloring_complex.models import Complex


def complex_summary(complex_: Complex) -> Dict[str, Any]:
    """d, facets, f, h, euler and edges_to_facets (indices into facets), in that order"""
    facets = complex_.sorted_facets()
    index = {facet: k for k, facet in enumerate(facets)}
    edges_to_facets = {
        f"{i}-{j}": sorted(index[facet] for facet in members)
        for (i, j), members in sorted(complex_.edge_classes.items())
    }
    return {
        "d": complex_.d,
        "facets": [chain_to_lists(facet) for facet in facets],
        "f": list(f_vector(complex_).entries),
        "h": list(h_vector(complex_).entries),
        "euler": euler_characteristics(complex_).euler,
        "edges_to_facets": edges_to_facets,
    }


def complex_to_json(complex_: Complex, indent: int = 2) -> str:
    return json.dumps(complex_summary(complex_), indent=indent)
