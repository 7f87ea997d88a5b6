"""
W-polynomial by enumeration of S_d, and the binomial-basis chromatic identity
"""

import itertools
import logging
from math import factorial
from typing import List, Optional

from common.guards import ensure_within, resolve_bounds
from common.models import Graph
from common.partition import partitioned_sweep
from common.polynomial import IntPolynomial
from config.models import EnumerationBounds
from cut_engine.profiles import cut_positions, path_lengths
from cut_engine.rules import CutRule, standard_cut_rule
from graph_core.oracles import chromatic_polynomial
from poly_lab.transforms import binomial

logger = logging.getLogger(__name__)


def ensure_permutations_enumerable(d: int, bounds: Optional[EnumerationBounds] = None) -> EnumerationBounds:
    bounds = resolve_bounds(bounds)
    ensure_within("d", d, bounds.max_d)
    ensure_within("d! permutations", factorial(d), bounds.max_perms)
    return bounds


def scan_permutations(graph: Graph, start: int, stop: int, rule: CutRule = standard_cut_rule) -> List[int]:
    """
    Cut-count histogram over lexicographic ranks [start, stop) of S_d.

    Returns:
        counts with counts[k] = number of scanned permutations having k cuts
    """
    counts = [0] * (graph.d + 1)
    window = itertools.islice(itertools.permutations(range(1, graph.d + 1)), start, stop)
    for perm in window:
        counts[len(cut_positions(path_lengths(graph, perm), perm, rule))] += 1
    logger.debug(f"Scanned ranks [{start}, {stop}) of S_{graph.d}")
    return counts


def _add_counts(a: List[int], b: List[int]) -> List[int]:
    return [x + y for x, y in zip(a, b)]


def w_polynomial(
    graph: Graph,
    bounds: Optional[EnumerationBounds] = None,
    workers: int = 1,
    rule: CutRule = standard_cut_rule,
) -> IntPolynomial:
    """
    W_G(t) = sum over pi in S_d of t^c(pi).

    Args:
        graph: labeled graph on [d]
        bounds: enumeration guards (d and d!)
        workers: rank ranges scanned concurrently; the result does not depend on it
        rule: cut rule

    Returns:
        IntPolynomial with coefficient k = number of permutations with k cuts
    """
    ensure_permutations_enumerable(graph.d, bounds)
    counts = partitioned_sweep(
        factorial(graph.d),
        lambda start, stop: scan_permutations(graph, start, stop, rule),
        _add_counts,
        workers=workers,
    )
    return IntPolynomial(tuple(counts))


def chromatic_identity_check(
    graph: Graph,
    n: int,
    bounds: Optional[EnumerationBounds] = None,
    rule: CutRule = standard_cut_rule,
) -> bool:
    """Check sum_pi C(n + d - c(pi), d) == chi_G(n), exactly"""
    d = graph.d
    w = w_polynomial(graph, bounds, rule=rule)
    lhs = sum(w.coefficient(k) * binomial(n + d - k, d) for k in range(d + 1))
    rhs = chromatic_polynomial(graph)(n)
    if lhs != rhs:
        logger.error(f"Chromatic identity fails for {graph.to_dict()} at n={n}: {lhs} != {rhs}")
        return False
    return True
