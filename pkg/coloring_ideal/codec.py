"""
Degree-n monomials of K_G <-> (n+1)-colorings of G
"""

import logging

from common.bitsets import full_mask
from common.exceptions import ImproperColoringError, MonomialError
from common.models import Coloring, Graph
from coloring_ideal.ideal import contains_by_blocks, difference_blocks
from coloring_ideal.models import Monomial

logger = logging.getLogger(__name__)


def decode_monomial(graph: Graph, monomial: Monomial) -> Coloring:
    """
    The (n+1)-coloring of a degree-n monomial of K_G.

    Vertices of S_i - S_{i-1} get color e_1 + ... + e_{i-1} + 1 and the
    remainder [d] - S_k gets color n + 1. A leading x_(empty set) leaves the
    bottom colors unused, a trailing x_[d] leaves the top colors unused.
    """
    if not contains_by_blocks(graph, monomial):
        raise MonomialError(f"{monomial} is not in the coloring ideal of {graph.to_dict()}")
    assignment = [0] * graph.d
    color = 1
    for block, exponent in zip(difference_blocks(graph, monomial), monomial.exponents + (0,)):
        for v in range(1, graph.d + 1):
            if block >> (v - 1) & 1:
                assignment[v - 1] = color
        color += exponent
    return Coloring(monomial.degree + 1, tuple(assignment))


def encode_coloring(graph: Graph, coloring: Coloring) -> Monomial:
    """
    x_(empty set)^(c_1 - 1) * prod_i x_{U_i}^(c_{i+1} - c_i) * x_[d]^(m - c_r)
    over the used colors c_1 < ... < c_r, where U_i is the union of the
    first i color classes; factors with exponent 0 are omitted.
    """
    if coloring.d != graph.d:
        raise ImproperColoringError(f"coloring covers {coloring.d} vertices, graph has {graph.d}")
    if not coloring.is_proper(graph):
        raise ImproperColoringError(f"coloring {coloring.to_dict()['assignment']} is not proper")
    classes = coloring.classes()
    used = [c for c, _ in classes]
    chain = []
    exponents = []
    if used[0] > 1:
        chain.append(0)
        exponents.append(used[0] - 1)
    union = 0
    for (color, cls), following in zip(classes, used[1:]):
        union |= cls
        chain.append(union)
        exponents.append(following - color)
    if coloring.palette > used[-1]:
        chain.append(full_mask(graph.d))
        exponents.append(coloring.palette - used[-1])
    monomial = Monomial(graph.d, tuple(chain), tuple(exponents))
    logger.debug(f"Encoded {coloring.assignment} with palette {coloring.palette} as {monomial}")
    return monomial
