"""
Degree-wise monomial counts in the face ring R and in K_G.

A degree-n monomial of R is a chain of k distinct nested subsets together
with a composition of n into k positive exponents, so every chain of length
k stands for C(n-1, k-1) monomials.
"""

import itertools
import logging
from collections import Counter
from typing import Iterator, Optional, Tuple

from common.bitsets import full_mask
from common.guards import ensure_within, resolve_bounds
from common.models import Graph
from config.models import EnumerationBounds
from coloring_ideal.ideal import contains_monomial
from coloring_ideal.models import Monomial
from poly_lab.transforms import binomial

logger = logging.getLogger(__name__)


def _ensure_monomials_enumerable(d: int, n: int, bounds: Optional[EnumerationBounds]) -> None:
    bounds = resolve_bounds(bounds)
    ensure_within("d for monomial enumeration", d, bounds.max_monomial_d)
    ensure_within("n for monomial enumeration", n, bounds.max_monomial_n)


def iter_chains(d: int, max_length: int) -> Iterator[Tuple[int, ...]]:
    """Strictly nested chains of subsets of [d] with 1..max_length members"""
    top = full_mask(d)

    def extend(chain: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        yield chain
        if len(chain) == max_length:
            return
        last = chain[-1]
        free = top & ~last
        sub = free
        while sub:
            yield from extend(chain + (last | sub,))
            sub = (sub - 1) & free

    if max_length < 1:
        return
    for first in range(top + 1):
        yield from extend((first,))


def _compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    for bars in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + bars + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def iter_ring_monomials(d: int, n: int, bounds: Optional[EnumerationBounds] = None) -> Iterator[Monomial]:
    """All degree-n monomials of R; there are (n+1)^d of them"""
    _ensure_monomials_enumerable(d, n, bounds)
    if n == 0:
        yield Monomial.unit(d)
        return
    for chain in iter_chains(d, n):
        for exponents in _compositions(n, len(chain)):
            yield Monomial(d, chain, exponents)


def ring_hilbert_function(d: int, n: int, bounds: Optional[EnumerationBounds] = None) -> int:
    """Number of degree-n monomials of R, counted chain by chain"""
    _ensure_monomials_enumerable(d, n, bounds)
    if n == 0:
        return 1
    return sum(binomial(n - 1, len(chain) - 1) for chain in iter_chains(d, n))


def member_chain_lengths(graph: Graph, max_length: int, bounds: Optional[EnumerationBounds] = None) -> Counter:
    """Support chains of K_G with at most max_length members, counted by length"""
    _ensure_monomials_enumerable(graph.d, max_length, bounds)
    lengths: Counter = Counter()
    for chain in iter_chains(graph.d, max_length):
        if contains_monomial(graph, Monomial.square_free(graph.d, chain)):
            lengths[len(chain)] += 1
    return lengths


def weigh_chain_lengths(lengths: Counter, n: int) -> int:
    """Degree-n monomials over the counted chains"""
    return sum(count * binomial(n - 1, k - 1) for k, count in lengths.items())


def count_degree_monomials(graph: Graph, n: int, bounds: Optional[EnumerationBounds] = None) -> int:
    """Number of degree-n monomials of K_G; equals chi_G(n + 1)"""
    _ensure_monomials_enumerable(graph.d, n, bounds)
    if n == 0:
        return int(contains_monomial(graph, Monomial.unit(graph.d)))
    total = weigh_chain_lengths(member_chain_lengths(graph, n, bounds), n)
    logger.debug(f"{total} degree-{n} monomials in K_G for {graph.to_dict()}")
    return total


def quotient_hilbert_function(graph: Graph, n: int, bounds: Optional[EnumerationBounds] = None) -> int:
    """Degree-n monomials of R outside K_G; equals T_G(n + 1)"""
    return ring_hilbert_function(graph.d, n, bounds) - count_degree_monomials(graph, n, bounds)
