"""
The coloring ideal K_G: basic coloring monomials, minimal generators, membership
"""

import itertools
import logging
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import FrozenSet, Optional, Tuple

from common.bitsets import full_mask
from common.exceptions import MonomialError
from common.models import Graph
from common.partition import partitioned_sweep
from config.models import EnumerationBounds
from coloring_ideal.models import GenStats, Monomial
from cut_engine.profiles import cut_profile
from cut_engine.w_polynomial import ensure_permutations_enumerable

logger = logging.getLogger(__name__)

Chain = Tuple[int, ...]


def _scan_basic_chains(graph: Graph, start: int, stop: int) -> FrozenSet[Chain]:
    window = itertools.islice(itertools.permutations(range(1, graph.d + 1)), start, stop)
    return frozenset(cut_profile(graph, perm).cumulative_unions() for perm in window)


@lru_cache(maxsize=256)
def _basic_chains(graph: Graph, workers: int) -> FrozenSet[Chain]:
    chains = partitioned_sweep(
        factorial(graph.d),
        lambda start, stop: _scan_basic_chains(graph, start, stop),
        lambda a, b: a | b,
        workers=workers,
    )
    logger.debug(f"{len(chains)} basic coloring monomials for {graph.to_dict()}")
    return chains


@lru_cache(maxsize=256)
def _minimal_chains(graph: Graph) -> Tuple[Chain, ...]:
    basic = sorted(_basic_chains(graph, 1), key=lambda c: (len(c), c))
    minimal = []
    for chain in basic:
        support = set(chain)
        if not any(set(kept) <= support for kept in minimal):
            minimal.append(chain)
    return tuple(minimal)


def basic_coloring_monomials(
    graph: Graph,
    bounds: Optional[EnumerationBounds] = None,
    workers: int = 1,
) -> FrozenSet[Monomial]:
    """
    Square-free monomials on the cumulative unions of short G-sequences.

    A permutation whose short G-sequence is empty contributes the unit
    monomial, which happens exactly for edgeless graphs.
    """
    ensure_permutations_enumerable(graph.d, bounds)
    return frozenset(Monomial.square_free(graph.d, c) for c in _basic_chains(graph, max(1, workers)))


def minimal_generators(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> FrozenSet[Monomial]:
    """Basic monomials whose support contains no other basic support"""
    ensure_permutations_enumerable(graph.d, bounds)
    return frozenset(Monomial.square_free(graph.d, c) for c in _minimal_chains(graph))


def _check_universe(graph: Graph, monomial: Monomial) -> None:
    if monomial.d != graph.d:
        raise MonomialError(f"monomial lives over [{monomial.d}], graph has {graph.d} vertices")


def contains_by_divisibility(graph: Graph, monomial: Monomial, bounds: Optional[EnumerationBounds] = None) -> bool:
    """Some basic monomial divides monomial, i.e. its support is a subset of monomial's"""
    _check_universe(graph, monomial)
    ensure_permutations_enumerable(graph.d, bounds)
    support = monomial.support
    return any(set(chain) <= support for chain in _minimal_chains(graph))


def difference_blocks(graph: Graph, monomial: Monomial) -> Tuple[int, ...]:
    """S_1, S_2 - S_1, ..., S_k - S_{k-1} and the remainder [d] - S_k"""
    blocks = []
    previous = 0
    for mask in monomial.chain:
        blocks.append(mask & ~previous)
        previous = mask
    blocks.append(full_mask(graph.d) & ~previous)
    return tuple(blocks)


def contains_by_blocks(graph: Graph, monomial: Monomial) -> bool:
    """Every difference block, the remainder included, is stable; an empty block is"""
    _check_universe(graph, monomial)
    return not any(graph.spans_edge(block) for block in difference_blocks(graph, monomial))


def contains_monomial(
    graph: Graph,
    monomial: Monomial,
    method: str = "blocks",
    bounds: Optional[EnumerationBounds] = None,
) -> bool:
    """
    Membership in K_G.

    Args:
        method: "blocks" for the stable-blocks criterion, "divisibility" for
            division by a basic coloring monomial

    Returns:
        True iff monomial lies in K_G; both methods agree
    """
    if method == "blocks":
        return contains_by_blocks(graph, monomial)
    if method == "divisibility":
        return contains_by_divisibility(graph, monomial, bounds)
    raise ValueError(f"Unknown membership method: {method}")


def multiply_by_top(monomial: Monomial) -> Monomial:
    """Multiply by x_[d]; the decoded coloring gains one unused top color"""
    return _multiply_by(monomial, full_mask(monomial.d))


def multiply_by_empty(monomial: Monomial) -> Monomial:
    """Multiply by x_(empty set); the decoded coloring shifts every color up by one"""
    return _multiply_by(monomial, 0)


def _multiply_by(monomial: Monomial, mask: int) -> Monomial:
    chain = list(monomial.chain)
    exponents = list(monomial.exponents)
    if mask in chain:
        exponents[chain.index(mask)] += 1
    else:
        chain.append(mask)
        exponents.append(1)
    return Monomial(monomial.d, tuple(chain), tuple(exponents))


def generator_stats(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> GenStats:
    """Degree histogram and label-free indeterminate multiplicities of the minimal generators"""
    ensure_permutations_enumerable(graph.d, bounds)
    chains = _minimal_chains(graph)
    histogram = Counter(len(c) for c in chains)
    occurrences = Counter(s for c in chains for s in c)
    return GenStats(
        degree_histogram=dict(sorted(histogram.items())),
        indeterminate_multiplicities=tuple(sorted(occurrences.values(), reverse=True)),
    )
