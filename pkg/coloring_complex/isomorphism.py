"""
Isomorphism of simplicial complexes given by facets.

Two complexes are compared through their vertex-facet incidence graphs: a
VF2 match (networkx) that sends vertices to vertices and facets to facets is
exactly a complex isomorphism. Vertices are labeled with structural
invariants only (facet degree and link f-vector), never with the size of the
underlying vertex subset.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from common.guards import ensure_within, resolve_bounds
from common.models import Graph
from config.models import EnumerationBounds
from coloring_complex.builder import build_complex, f_vector
from coloring_complex.models import Complex, IsoResult, ScanEntry
from graph_core.operations import isomorphism_class_representatives
from graph_core.oracles import chromatic_polynomial

logger = logging.getLogger(__name__)


def vertex_invariants(complex_: Complex) -> Dict[int, Tuple]:
    """(facet degree, link f-vector) for every vertex"""
    degree: Counter = Counter()
    for facet in complex_.facets:
        degree.update(facet)
    link_counts: Dict[int, Counter] = {v: Counter() for v in complex_.vertices}
    for face in complex_.faces:
        for v in face:
            link_counts[v][len(face) - 1] += 1
    invariants = {}
    for v in complex_.vertices:
        counts = link_counts[v]
        link_f = tuple(counts[k] for k in range(max(counts) + 1))
        invariants[v] = (degree[v], link_f)
    return invariants


def distinguishing_invariant(inv1: Dict[int, Tuple], inv2: Dict[int, Tuple]) -> Optional[str]:
    """Name the first vertex invariant whose multiset differs, or None"""
    degrees1 = Counter(inv[0] for inv in inv1.values())
    degrees2 = Counter(inv[0] for inv in inv2.values())
    if degrees1 != degrees2:
        only1 = dict(sorted((degrees1 - degrees2).items()))
        only2 = dict(sorted((degrees2 - degrees1).items()))
        return f"facet-degree multisets differ: {only1} vs {only2}"
    if sorted(inv1.values()) != sorted(inv2.values()):
        return "link f-vectors differ"
    return None


def _incidence_graph(complex_: Complex, invariants: Dict[int, Tuple]) -> nx.Graph:
    graph = nx.Graph()
    for v in complex_.vertices:
        graph.add_node(("v", v), kind="v", invariant=invariants[v])
    for facet in complex_.facets:
        graph.add_node(("F", facet), kind="F", invariant=len(facet))
        graph.add_edges_from((("v", v), ("F", facet)) for v in facet)
    return graph


def _node_match(a: Dict, b: Dict) -> bool:
    return a["kind"] == b["kind"] and a["invariant"] == b["invariant"]


def witness_verifies(c1: Complex, c2: Complex, witness: Dict[int, int]) -> bool:
    """witness is a vertex bijection sending the facets of c1 onto the facets of c2"""
    if sorted(witness) != sorted(c1.vertices) or sorted(witness.values()) != sorted(c2.vertices):
        return False
    image = {frozenset(witness[v] for v in facet) for facet in c1.facets}
    return image == {frozenset(facet) for facet in c2.facets}


def complexes_isomorphic(
    c1: Complex,
    c2: Complex,
    bounds: Optional[EnumerationBounds] = None,
) -> IsoResult:
    """
    Decide isomorphism of two complexes.

    Returns:
        IsoResult with a verified vertex bijection when isomorphic, otherwise
        the first invariant that tells them apart
    """
    if c1.void or c2.void:
        if c1.void and c2.void:
            return IsoResult(True, {}, "both void")
        return IsoResult(False, None, "exactly one complex is void")

    bounds = resolve_bounds(bounds)
    ensure_within("complex vertices for isomorphism", len(c1.vertices) + len(c2.vertices), bounds.max_iso_vertices)

    if f_vector(c1) != f_vector(c2):
        return IsoResult(False, None, "f-vectors differ")
    inv1, inv2 = vertex_invariants(c1), vertex_invariants(c2)
    difference = distinguishing_invariant(inv1, inv2)
    if difference is not None:
        return IsoResult(False, None, difference)

    matcher = GraphMatcher(_incidence_graph(c1, inv1), _incidence_graph(c2, inv2), node_match=_node_match)
    if not matcher.is_isomorphic():
        return IsoResult(False, None, "no incidence-preserving bijection")
    witness = {src[1]: dst[1] for src, dst in matcher.mapping.items() if src[0] == "v"}
    if not witness_verifies(c1, c2, witness):
        logger.error("Incidence match did not verify as a complex isomorphism")
        return IsoResult(False, None, "witness failed verification")
    return IsoResult(True, witness, "witness verified on every facet")


def scan_isomorphic_complexes(d: int, bounds: Optional[EnumerationBounds] = None) -> List[ScanEntry]:
    """
    Compare the coloring complexes of every pair of non-isomorphic,
    chromatically equivalent graphs with at least one edge on d vertices.

    Pairs whose complexes exceed the isomorphism bound are reported with
    isomorphic=None.
    """
    bounds = resolve_bounds(bounds)
    classes: Dict[Tuple[int, ...], List[Graph]] = {}
    for graph in isomorphism_class_representatives(d):
        if graph.edge_count == 0:
            continue
        classes.setdefault(chromatic_polynomial(graph).coeffs, []).append(graph)

    entries = []
    for key in sorted(classes):
        members = sorted(classes[key], key=lambda g: g.edges)
        if len(members) < 2:
            continue
        complexes = [build_complex(g, bounds) for g in members]
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                total = len(complexes[a].vertices) + len(complexes[b].vertices)
                if total > bounds.max_iso_vertices:
                    logger.warning(f"Skipping pair with {total} complex vertices (max_iso_vertices={bounds.max_iso_vertices})")
                    verdict = None
                else:
                    verdict = complexes_isomorphic(complexes[a], complexes[b], bounds).isomorphic
                entries.append(ScanEntry(members[a], members[b], verdict))
    logger.info(f"Scanned {len(entries)} chromatically equivalent pairs on {d} vertices")
    return entries
