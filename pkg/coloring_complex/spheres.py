"""
Edge-spheres of a coloring complex and their pairwise intersections
"""

import logging
from typing import Sequence

import networkx as nx

from common.exceptions import ComplexError
from common.models import Edge, Graph
from coloring_complex.builder import edge_permutation_facets, ensure_complex_buildable
from coloring_complex.models import Complex, SeparationReport

logger = logging.getLogger(__name__)


def _as_edge(graph: Graph, edge: Sequence[int]) -> Edge:
    i, j = (int(v) for v in edge)
    i, j = min(i, j), max(i, j)
    if not (1 <= i and j <= graph.d) or i == j or not graph.has_edge(i, j):
        raise ComplexError(f"({i}, {j}) is not an edge of the graph")
    return (i, j)


def edge_sphere(graph: Graph, edge: Sequence[int]) -> Complex:
    """Subcomplex generated by the (d-1)! facets of one edge"""
    ensure_complex_buildable(graph)
    edge = _as_edge(graph, edge)
    facets = edge_permutation_facets(graph.d, edge)
    return Complex(graph.d, facets, {edge: facets})


def sphere_intersection(graph: Graph, e: Sequence[int], f: Sequence[int]) -> Complex:
    """Common faces of the e-sphere and the f-sphere"""
    e, f = _as_edge(graph, e), _as_edge(graph, f)
    if e == f:
        raise ComplexError(f"intersection needs two distinct edges, got {e} twice")
    common = edge_sphere(graph, e).faces & edge_sphere(graph, f).faces
    return Complex.from_faces(graph.d, common)


def separation_report(graph: Graph, e: Sequence[int], f: Sequence[int]) -> SeparationReport:
    """
    Split the e-sphere vertices outside the f-intersection by which endpoint
    of f = ij they contain, and count connected pieces of the e-sphere
    1-skeleton restricted to those vertices.
    """
    e, f = _as_edge(graph, e), _as_edge(graph, f)
    sphere = edge_sphere(graph, e)
    shared = set(sphere_intersection(graph, e, f).vertices)
    outside = [v for v in sphere.vertices if v not in shared]

    i, j = f
    bit_i, bit_j = 1 << (i - 1), 1 << (j - 1)
    side = {}
    for v in outside:
        if v & bit_i and not v & bit_j:
            side[v] = "i"
        elif v & bit_j and not v & bit_i:
            side[v] = "j"
        else:
            side[v] = "stray"

    skeleton = nx.Graph()
    skeleton.add_nodes_from(outside)
    skeleton.add_edges_from(
        face for face in sphere.faces
        if len(face) == 2 and face[0] in side and face[1] in side
    )
    components = list(nx.connected_components(skeleton))
    mixed = sum(1 for comp in components if len({side[v] for v in comp}) > 1)

    report = SeparationReport(
        edge=e,
        other=f,
        contains_i_only=sum(1 for s in side.values() if s == "i"),
        contains_j_only=sum(1 for s in side.values() if s == "j"),
        stray=sum(1 for s in side.values() if s == "stray"),
        components=len(components),
        mixed_components=mixed,
    )
    logger.debug(f"Separation of the {e}-sphere by the {f}-sphere: {report.to_dict()}")
    return report
