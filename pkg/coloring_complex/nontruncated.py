"""
The coloring complex with the cone point [d] kept.

Its minimal non-faces are the cumulative unions of full G-sequences (ending
in [d]) instead of short ones. The h-vector is the Eulerian vector of A_d
plus the truncated h-vector shifted one step right.
"""

import itertools
import logging
from math import factorial
from typing import FrozenSet, Optional, Tuple

from common.bitsets import full_mask
from common.models import Graph
from config.models import EnumerationBounds
from coloring_complex.builder import build_complex, ensure_complex_buildable, h_vector
from coloring_complex.models import Chain, Complex
from cut_engine.profiles import cut_profile
from cut_engine.w_polynomial import ensure_permutations_enumerable
from poly_lab.models import FVector, HVector
from poly_lab.transforms import eulerian_polynomial, f_to_h, shift_down, vector_sum

logger = logging.getLogger(__name__)


def full_sequence_chains(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> FrozenSet[Chain]:
    """Cumulative unions of full G-sequences, minimal under inclusion"""
    ensure_permutations_enumerable(graph.d, bounds)
    chains = set()
    for perm in itertools.permutations(range(1, graph.d + 1)):
        profile = cut_profile(graph, perm)
        chains.add(profile.cumulative_unions() + (full_mask(graph.d),))
    minimal = []
    for chain in sorted(chains, key=lambda c: (len(c), c)):
        if not any(set(kept) <= set(chain) for kept in minimal):
            minimal.append(chain)
    return frozenset(minimal)


def nontruncated_complex(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> Complex:
    """
    All chains of nonempty subsets of [d] ([d] allowed) containing no
    full-sequence chain, returned through their facets.
    """
    ensure_complex_buildable(graph, bounds)
    non_faces = [set(c) for c in full_sequence_chains(graph, bounds)]
    top = full_mask(graph.d)
    faces = set()

    def extend(chain: Tuple[int, ...]) -> None:
        members = set(chain)
        if any(nf <= members for nf in non_faces):
            return
        faces.add(chain)
        last = chain[-1] if chain else 0
        free = top & ~last
        sub = free
        while sub:
            extend(chain + (last | sub,))
            sub = (sub - 1) & free

    extend(())
    complex_ = Complex.from_faces(graph.d, faces)
    logger.info(f"Non-truncated complex for {graph.to_dict()}: {len(complex_.facets)} facets")
    return complex_


def nontruncated_f_vector(complex_: Complex) -> FVector:
    counts = [0] * complex_.d
    for face in complex_.faces:
        counts[len(face)] += 1
    return FVector(tuple(counts))


def nontruncated_h_vector(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> HVector:
    """Eulerian vector (A_d / t) plus (0, h(truncated complex))"""
    ensure_complex_buildable(graph, bounds)
    eulerian = shift_down(eulerian_polynomial(graph.d)).padded(graph.d)
    truncated = h_vector(build_complex(graph, bounds))
    return HVector(tuple(vector_sum(eulerian, (0,) + truncated.entries)))


def nontruncated_h_vector_by_build(graph: Graph, bounds: Optional[EnumerationBounds] = None) -> HVector:
    """h-vector of the directly built complex, with e = d - 1"""
    complex_ = nontruncated_complex(graph, bounds)
    return f_to_h(nontruncated_f_vector(complex_), graph.d - 1)
