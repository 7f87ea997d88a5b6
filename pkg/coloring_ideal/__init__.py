"""
The coloring ideal of a graph in the face ring of the Boolean lattice
"""

from .codec import decode_monomial, encode_coloring
from .hilbert import (
    count_degree_monomials,
    iter_chains,
    iter_ring_monomials,
    member_chain_lengths,
    quotient_hilbert_function,
    ring_hilbert_function,
    weigh_chain_lengths,
)
from .ideal import (
    basic_coloring_monomials,
    contains_by_blocks,
    contains_by_divisibility,
    contains_monomial,
    difference_blocks,
    generator_stats,
    minimal_generators,
    multiply_by_empty,
    multiply_by_top,
)
from .models import GenStats, Monomial
from .syntax import format_monomial, parse_monomial

__all__ = [
    'GenStats', 'Monomial',
    'decode_monomial', 'encode_coloring',
    'count_degree_monomials', 'iter_chains', 'iter_ring_monomials', 'member_chain_lengths', 'weigh_chain_lengths',
    'quotient_hilbert_function', 'ring_hilbert_function',
    'basic_coloring_monomials', 'contains_by_blocks', 'contains_by_divisibility',
    'contains_monomial', 'difference_blocks', 'generator_stats', 'minimal_generators',
    'multiply_by_empty', 'multiply_by_top',
    'format_monomial', 'parse_monomial',
]
