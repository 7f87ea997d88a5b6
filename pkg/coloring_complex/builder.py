"""
Construction of the (truncated) coloring complex and its face statistics.

Complex vertices are the proper nonempty subsets of [d]. A chain is a face
iff one of its difference blocks, or the remainder [d] - S_k, contains an
edge. The facets are the chains obtained from edge-permutations: order the
vertices outside an edge ij together with the pair ij itself, then take
cumulative unions, dropping [d].
"""

import itertools
import logging
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Union

from common.bitsets import full_mask, is_proper_subset, mask_of, members, popcount
from common.exceptions import ComplexError
from common.guards import ensure_within, resolve_bounds
from common.models import Edge, Graph
from common.partition import partitioned_sweep
from config.models import EnumerationBounds
from coloring_complex.models import Chain, Complex, EulerCharacteristics, canonical_chain
from poly_lab.models import FVector, HVector
from poly_lab.transforms import f_to_h

logger = logging.getLogger(__name__)

MIN_COMPLEX_D = 3


def validate_chain(d: int, chain: Iterable[int]) -> Chain:
    """Canonical form of a chain of proper nonempty subsets of [d]"""
    ordered = canonical_chain(chain)
    top = full_mask(d)
    for mask in ordered:
        if mask == 0 or mask & ~top or mask == top:
            raise ComplexError(f"{members(mask)} is not a proper nonempty subset of 1..{d}")
    for a, b in zip(ordered, ordered[1:]):
        if not is_proper_subset(a, b):
            raise ComplexError(f"{members(a)} and {members(b)} are not strictly nested")
    return ordered


def chain_blocks(d: int, chain: Chain) -> Iterator[int]:
    """Difference blocks S_1, S_2 - S_1, ... followed by the remainder"""
    previous = 0
    for mask in chain:
        yield mask & ~previous
        previous = mask
    yield full_mask(d) & ~previous


def _require_dimension(graph: Graph) -> None:
    if graph.d < MIN_COMPLEX_D:
        raise ComplexError(f"coloring complexes need d >= {MIN_COMPLEX_D}, got {graph.d}")


def is_face(graph: Graph, chain: Iterable[int]) -> bool:
    _require_dimension(graph)
    chain = validate_chain(graph.d, chain)
    if graph.edge_count == 0:
        return False
    return any(graph.spans_edge(block) for block in chain_blocks(graph.d, chain))


def _edge_items(d: int, edge: Edge) -> Dict[Union[int, Edge], int]:
    i, j = edge
    items: Dict[Union[int, Edge], int] = {v: 1 << (v - 1) for v in range(1, d + 1) if v not in edge}
    items[edge] = mask_of(edge)
    return items


def facet_from_edge_permutation(d: int, edge: Edge, order: Sequence[Union[int, Sequence[int]]]) -> Chain:
    """
    Facet of an edge-permutation.

    Args:
        d: vertex count
        edge: the edge (i, j)
        order: the vertices outside the edge and the edge itself (as a pair)
            in some order, e.g. 3, (2, 5), 1, 4

    Returns:
        the cumulative unions, without the final [d]
    """
    edge = (min(edge), max(edge))
    items = _edge_items(d, edge)
    seen = []
    for item in order:
        key = (min(item), max(item)) if isinstance(item, (tuple, list)) else int(item)
        if key not in items or key in seen:
            raise ComplexError(f"{list(order)} is not an ordering of the vertices off {edge} and the edge")
        seen.append(key)
    if len(seen) != len(items):
        raise ComplexError(f"{list(order)} is not an ordering of the vertices off {edge} and the edge")
    unions = []
    running = 0
    for key in seen[:-1]:
        running |= items[key]
        unions.append(running)
    return tuple(unions)


def edge_permutation_facets(d: int, edge: Edge) -> FrozenSet[Chain]:
    """The (d-1)! facets attached to one edge"""
    items = list(_edge_items(d, edge))
    return frozenset(facet_from_edge_permutation(d, edge, order) for order in itertools.permutations(items))


def edge_of_facet(graph: Graph, facet: Iterable[int]) -> Edge:
    """The unique pair sharing a difference block of a facet; it is an edge of graph"""
    facet = validate_chain(graph.d, facet)
    if len(facet) != graph.d - 2:
        raise ComplexError(f"a facet has {graph.d - 2} members, got {len(facet)}")
    pair = next(block for block in chain_blocks(graph.d, facet) if popcount(block) == 2)
    i, j = members(pair)
    if not graph.has_edge(i, j):
        raise ComplexError(f"{i}{j} is not an edge; the chain is not a facet")
    return (i, j)


def ensure_complex_buildable(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> EnumerationBounds:
    _require_dimension(graph)
    bounds = resolve_bounds(bounds)
    ensure_within("d for complex construction", graph.d, bounds.max_complex_d)
    return bounds


def build_complex(
    graph: Graph,
    bounds: Optional[EnumerationBounds] = None,
    workers: int = 1,
) -> Complex:
    """
    Facets of the coloring complex, grouped by edge.

    Returns:
        Complex with E (d-1)! facets; the void complex for an edgeless graph
    """
    ensure_complex_buildable(graph, bounds)
    edges = graph.edges

    def scan(start: int, stop: int) -> Dict[Edge, FrozenSet[Chain]]:
        return {edge: edge_permutation_facets(graph.d, edge) for edge in edges[start:stop]}

    classes = partitioned_sweep(len(edges), scan, lambda a, b: {**a, **b}, workers=workers) if edges else {}
    facets = frozenset().union(*classes.values()) if classes else frozenset()
    logger.info(
        f"Built coloring complex for {graph.to_dict()}: {len(facets)} facets over {len(classes)} edge-spheres"
    )
    return Complex(graph.d, facets, dict(sorted(classes.items())))


def faces_by_enumeration(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> FrozenSet[Chain]:
    """Every chain accepted by is_face, found by walking all chains of proper nonempty subsets"""
    ensure_complex_buildable(graph, bounds)
    top = full_mask(graph.d)
    found = set()

    def extend(chain: Chain) -> None:
        if is_face(graph, chain):
            found.add(chain)
        last = chain[-1] if chain else 0
        free = top & ~last
        sub = free
        while sub:
            nxt = last | sub
            if nxt != top:
                extend(chain + (nxt,))
            sub = (sub - 1) & free

    extend(())
    return frozenset(found)


def f_vector(complex_: Complex) -> FVector:
    if complex_.void:
        return FVector(())
    counts = [0] * (max(len(f) for f in complex_.facets) + 1)
    for face in complex_.faces:
        counts[len(face)] += 1
    return FVector(tuple(counts))


def h_vector(complex_: Complex) -> HVector:
    if complex_.void:
        return HVector(())
    f = f_vector(complex_)
    return f_to_h(f, f.e)


def euler_characteristics(complex_: Complex) -> EulerCharacteristics:
    if complex_.void:
        return EulerCharacteristics(0, -1, void=True)
    f = f_vector(complex_).entries
    euler = sum((-1) ** (k - 1) * f[k] for k in range(1, len(f)))
    return EulerCharacteristics(euler, euler - 1)

