"""
The coloring complex of a graph: faces, facets, edge-spheres, f/h-vectors
"""

from .builder import (
    build_complex,
    edge_of_facet,
    edge_permutation_facets,
    euler_characteristics,
    f_vector,
    faces_by_enumeration,
    facet_from_edge_permutation,
    h_vector,
    is_face,
    validate_chain,
)
from .export import complex_summary, complex_to_json
from .isomorphism import complexes_isomorphic, scan_isomorphic_complexes, vertex_invariants, witness_verifies
from .models import Complex, EulerCharacteristics, IsoResult, ScanEntry, SeparationReport
from .nontruncated import (
    full_sequence_chains,
    nontruncated_complex,
    nontruncated_f_vector,
    nontruncated_h_vector,
    nontruncated_h_vector_by_build,
)
from .spheres import edge_sphere, separation_report, sphere_intersection

__all__ = [
    'Complex', 'EulerCharacteristics', 'IsoResult', 'ScanEntry', 'SeparationReport',
    'build_complex', 'edge_of_facet', 'edge_permutation_facets', 'euler_characteristics',
    'f_vector', 'faces_by_enumeration', 'facet_from_edge_permutation', 'h_vector',
    'is_face', 'validate_chain',
    'complex_summary', 'complex_to_json',
    'complexes_isomorphic', 'scan_isomorphic_complexes', 'vertex_invariants', 'witness_verifies',
    'full_sequence_chains', 'nontruncated_complex', 'nontruncated_f_vector',
    'nontruncated_h_vector', 'nontruncated_h_vector_by_build',
    'edge_sphere', 'separation_report', 'sphere_intersection',
]
