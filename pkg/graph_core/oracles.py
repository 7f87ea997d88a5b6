"""
Independent brute-force oracles.

Everything downstream (W-polynomial, coloring ideal, coloring complex) is
checked against the functions in this module, so none of them reuse any of
the permutation machinery: colorings and orientations are enumerated
directly and the chromatic polynomial comes from deletion-contraction.
"""

import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from common.bitsets import full_mask, members
from common.guards import ensure_within, resolve_bounds
from common.models import Edge, Graph
from common.partition import partitioned_sweep
from common.polynomial import IntPolynomial
from config.models import EnumerationBounds
from graph_core.models import OrientationCount

logger = logging.getLogger(__name__)

# deletion-contraction memo entries kept across calls
CHROMATIC_CACHE_SIZE = 1 << 16


def is_stable(graph: Graph, vertex_mask: int) -> bool:
    """True iff no edge of graph has both endpoints in vertex_mask"""
    return not graph.spans_edge(vertex_mask)


def count_colorings(graph: Graph, n: int, bounds: Optional[EnumerationBounds] = None) -> int:
    """Number of proper maps V -> [n], counted by exhaustive backtracking"""
    bounds = resolve_bounds(bounds)
    ensure_within("n^d colorings", n ** graph.d, bounds.max_colorings)
    d = graph.d
    # earlier[v] lists the neighbors of v with smaller label
    earlier = [[u for u in members(graph.neighbors(v)) if u < v] for v in range(1, d + 1)]
    colors = [0] * (d + 1)

    def extend(v: int) -> int:
        if v > d:
            return 1
        total = 0
        for c in range(1, n + 1):
            if all(colors[u] != c for u in earlier[v - 1]):
                colors[v] = c
                total += extend(v + 1)
        colors[v] = 0
        return total

    return extend(1)


def _falling_factorial(d: int) -> IntPolynomial:
    result = IntPolynomial.constant(1)
    for k in range(d):
        result = result * IntPolynomial((-k, 1))
    return result


def _contract(edges: Tuple[Edge, ...], u: int, v: int) -> Tuple[Edge, ...]:
    """Merge v into u (u < v) and close the label gap left by v"""
    def image(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    contracted = set()
    for a, b in edges:
        a, b = image(a), image(b)
        if a != b:
            contracted.add((min(a, b), max(a, b)))
    return tuple(sorted(contracted))


@lru_cache(maxsize=CHROMATIC_CACHE_SIZE)
def _chromatic(d: int, edges: Tuple[Edge, ...]) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(d)
    if len(edges) == d * (d - 1) // 2:
        return _falling_factorial(d)
    u, v = edges[-1]
    deleted = edges[:-1]
    return _chromatic(d, deleted) - _chromatic(d - 1, _contract(deleted, u, v))


def chromatic_polynomial(graph: Graph) -> IntPolynomial:
    """Chromatic polynomial by memoized deletion-contraction on labeled edge lists"""
    result = _chromatic(graph.d, graph.edges)
    logger.debug(f"Deletion-contraction cache holds {_chromatic.cache_info().currsize} graphs")
    return result


def _is_acyclic(d: int, out_masks: List[int]) -> bool:
    remaining = full_mask(d)
    while remaining:
        sinks = 0
        for v in members(remaining):
            if out_masks[v - 1] & remaining == 0:
                sinks |= 1 << (v - 1)
        if not sinks:
            return False
        remaining &= ~sinks
    return True


def _scan_orientations(graph: Graph, start: int, stop: int) -> int:
    count = 0
    for code in range(start, stop):
        out_masks = [0] * graph.d
        for k, (i, j) in enumerate(graph.edges):
            if code >> k & 1:
                out_masks[j - 1] |= 1 << (i - 1)
            else:
                out_masks[i - 1] |= 1 << (j - 1)
        if _is_acyclic(graph.d, out_masks):
            count += 1
    return count


def count_acyclic_orientations(
    graph: Graph,
    bounds: Optional[EnumerationBounds] = None,
    workers: int = 1,
) -> OrientationCount:
    """
    Count acyclic orientations by trying all 2^E orientations.

    Beyond the configured edge bound the count falls back to Stanley's
    (-1)^d chi_G(-1) and the result is marked formula_derived.
    """
    bounds = resolve_bounds(bounds)
    if graph.edge_count > bounds.max_orientation_edges:
        logger.warning(
            f"{graph.edge_count} edges exceed max_orientation_edges={bounds.max_orientation_edges}; "
            f"using (-1)^d chi(-1)"
        )
        value = (-1) ** graph.d * chromatic_polynomial(graph)(-1)
        return OrientationCount(value, formula_derived=True)
    total = 1 << graph.edge_count
    count = partitioned_sweep(
        total,
        lambda start, stop: _scan_orientations(graph, start, stop),
        lambda a, b: a + b,
        workers=workers,
    )
    return OrientationCount(count)


def chromatic_class_signature(
    graph: Graph,
    n: Optional[int] = None,
    bounds: Optional[EnumerationBounds] = None,
) -> Dict[Tuple[int, ...], int]:
    """
    Proper colorings with colors from [n] grouped by the partition of d formed by
    their nonempty class sizes (sizes sorted decreasingly). n defaults to d.
    """
    bounds = resolve_bounds(bounds)
    n = graph.d if n is None else n
    ensure_within("n^d colorings", n ** graph.d, bounds.max_colorings)
    signature: Counter = Counter()
    for assignment in itertools.product(range(1, n + 1), repeat=graph.d):
        if any(assignment[i - 1] == assignment[j - 1] for i, j in graph.edges):
            continue
        sizes = tuple(sorted(Counter(assignment).values(), reverse=True))
        signature[sizes] += 1
    return dict(sorted(signature.items(), reverse=True))
