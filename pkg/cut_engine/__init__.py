"""
Permutation cut statistics, the W-polynomial and the coloring bijection
"""

from .bijection import coloring_from_permutation, colorings_of_permutation
from .models import CutProfile
from .profiles import as_permutation, canonical_permutation, cut_profile, parse_permutation, path_lengths
from .rules import CUT_RULES, get_cut_rule, standard_cut_rule, ties_never_cut_rule
from .w_polynomial import chromatic_identity_check, scan_permutations, w_polynomial

__all__ = [
    'CutProfile',
    'as_permutation', 'canonical_permutation', 'cut_profile', 'parse_permutation', 'path_lengths',
    'CUT_RULES', 'get_cut_rule', 'standard_cut_rule', 'ties_never_cut_rule',
    'chromatic_identity_check', 'scan_permutations', 'w_polynomial',
    'coloring_from_permutation', 'colorings_of_permutation',
]
