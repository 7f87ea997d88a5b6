"""
Checks on the coloring complex
"""

import itertools
from math import factorial
from typing import List, Optional

from common.bitsets import is_proper_subset

from common.models import Graph
from coloring_complex.builder import (
    build_complex,
    edge_of_facet,
    euler_characteristics,
    f_vector,
    faces_by_enumeration,
    h_vector,
)
from coloring_complex.isomorphism import complexes_isomorphic, witness_verifies
from coloring_complex.models import canonical_chain
from coloring_complex.nontruncated import nontruncated_h_vector, nontruncated_h_vector_by_build
from coloring_complex.spheres import edge_sphere, separation_report, sphere_intersection
from coloring_ideal.ideal import minimal_generators
from graph_core.oracles import chromatic_polynomial, count_acyclic_orientations
from poly_lab.transforms import shift_down, tail_polynomial, truncated_boolean_f_vector, w_transform
from verifier.checks.base import BaseCheck
from verifier.models import CheckResult

COMPLEX_MIN_D = 3
COMPLEX_MAX_D = 6
STRUCTURE_SAMPLES = 20


class ComplexCheck(BaseCheck):
    """Shared instance family: graphs with an edge, 3 <= d <= 5, plus samples at d = 6"""

    def small_graphs(self) -> List[Graph]:
        return [g for g in self.instances.family(COMPLEX_MIN_D, min(5, self.config.hilbert_max_d)) if g.edge_count]

    def graphs(self, samples: Optional[int] = None) -> List[Graph]:
        graphs = self.small_graphs()
        for d in self.config.sample_d:
            if COMPLEX_MIN_D <= d <= COMPLEX_MAX_D and d > self.config.hilbert_max_d:
                sampled = [g for g in self.instances.sampled(d) if g.edge_count]
                graphs.extend(sampled[:samples] if samples is not None else sampled)
        return graphs


class TailHVectorCheck(ComplexCheck):
    name = "tail_h_vector"
    claim = "h(Delta_G) = (1/t) W-transform of the tail with D = d"

    def run(self) -> CheckResult:
        for graph in self.graphs():
            tail = tail_polynomial(chromatic_polynomial(graph), graph.d)
            expected = shift_down(w_transform(tail, graph.d)).padded(graph.d - 1)
            actual = list(h_vector(build_complex(graph, self.bounds)).entries)
            self.record(actual == expected, f"{graph.to_dict()}: {actual} != {expected}")
        return self.result()


class FacetCountCheck(ComplexCheck):
    name = "facet_count"
    claim = "E (d-1)! facets, (d-1)! per edge, edge_of_facet well defined"

    def run(self) -> CheckResult:
        for graph in self.graphs():
            complex_ = build_complex(graph, self.bounds)
            per_edge = factorial(graph.d - 1)
            ok = len(complex_.facets) == graph.edge_count * per_edge
            ok = ok and all(len(facets) == per_edge for facets in complex_.edge_classes.values())
            ok = ok and all(
                edge_of_facet(graph, facet) == edge
                for edge, facets in complex_.edge_classes.items()
                for facet in facets
            )
            self.record(ok, f"{graph.to_dict()}")
        return self.result()


class AcyclicOrientationCheck(ComplexCheck):
    name = "acyclic_orientations"
    claim = "h_(d-2) = (-1)^(d-3) reduced Euler characteristic = AO - 1"

    def run(self) -> CheckResult:
        for graph in self.small_graphs():
            complex_ = build_complex(graph, self.bounds)
            orientations = int(count_acyclic_orientations(graph, self.bounds))
            top = h_vector(complex_).entries[-1]
            reduced = euler_characteristics(complex_).reduced
            ok = top == orientations - 1 and (-1) ** (graph.d - 3) * reduced == orientations - 1
            self.record(ok, f"{graph.to_dict()}: h_top={top}, reduced={reduced}, AO={orientations}")
        return self.result()


class TreeComplexCheck(BaseCheck):
    name = "tree_complexes"
    claim = "path and star on 4 vertices: h=(1,10,7), (1,12,21,8), not isomorphic"

    def run(self) -> CheckResult:
        path, star = self.instances.fixture("p4"), self.instances.fixture("star4")
        complexes = []
        for graph in (path, star):
            complex_ = build_complex(graph, self.bounds)
            complexes.append(complex_)
            self.record(h_vector(complex_).entries == (1, 10, 7), f"h of {graph.to_dict()}")
            self.record(nontruncated_h_vector(graph, self.bounds).entries == (1, 12, 21, 8),
                        f"non-truncated h of {graph.to_dict()}")
            self.record(nontruncated_h_vector_by_build(graph, self.bounds).entries == (1, 12, 21, 8),
                        f"directly built non-truncated h of {graph.to_dict()}")
        self.record(not complexes_isomorphic(*complexes, bounds=self.bounds).isomorphic, "complexes isomorphic")
        return self.result()


class TwoEdgeCheck(BaseCheck):
    name = "two_edge_graphs"
    claim = "disjoint and adjacent edge pairs: isomorphic complexes at d=4, distinguishable at d=5"

    # on 5 vertices the two complexes already differ in facet degrees
    EXPECTED = {4: True, 5: False}

    def run(self) -> CheckResult:
        for d, expected in self.EXPECTED.items():
            c1 = build_complex(self.instances.fixture(f"two_edges_disjoint_d{d}"), self.bounds)
            c2 = build_complex(self.instances.fixture(f"two_edges_adjacent_d{d}"), self.bounds)
            result = complexes_isomorphic(c1, c2, self.bounds)
            if expected:
                ok = result.isomorphic and witness_verifies(c1, c2, result.witness)
            else:
                ok = not result.isomorphic
                if ok:
                    self.note(f"d={d}: {result.reason}")
            self.record(ok, f"d={d}: expected isomorphic={expected}, got {result.isomorphic} ({result.reason})")
        return self.result()


class StructureCheck(ComplexCheck):
    name = "structure"
    claim = "face sets agree, edge-spheres and intersections are truncated Boolean order complexes, halves separate"

    def run(self) -> CheckResult:
        for graph in self.graphs(samples=STRUCTURE_SAMPLES):
            complex_ = build_complex(graph, self.bounds)
            self.record(complex_.faces == faces_by_enumeration(graph, self.bounds), f"face sets of {graph.to_dict()}")
            if graph.d > 5:
                continue
            sphere_f = truncated_boolean_f_vector(graph.d - 1)
            for edge in graph.edges:
                self.record(f_vector(edge_sphere(graph, edge)) == sphere_f, f"{edge}-sphere of {graph.to_dict()}")
            if graph.d < 4:
                continue
            meet_f = truncated_boolean_f_vector(graph.d - 2)
            for e, f in itertools.permutations(graph.edges, 2):
                if e < f:
                    self.record(f_vector(sphere_intersection(graph, e, f)) == meet_f,
                                f"{e} and {f} spheres of {graph.to_dict()}")
                self.record(separation_report(graph, e, f).separated, f"{e}-sphere split by {f} in {graph.to_dict()}")
        return self.result()


class MinimalNonFaceCheck(ComplexCheck):
    name = "minimal_non_faces"
    claim = "minimal non-faces of Delta_G = supports of the minimal generators"

    def run(self) -> CheckResult:
        for graph in self.small_graphs():
            faces = build_complex(graph, self.bounds).faces
            non_faces = set()
            for face in faces:
                for extra in range(1, (1 << graph.d) - 1):
                    if extra in face:
                        continue
                    candidate = canonical_chain(face + (extra,))
                    if candidate in faces or not _is_chain(candidate):
                        continue
                    if all(sub in faces for sub in itertools.combinations(candidate, len(candidate) - 1)):
                        non_faces.add(candidate)
            supports = {m.chain for m in minimal_generators(graph, self.bounds)}
            self.record(non_faces == supports, f"{graph.to_dict()}")
        return self.result()


def _is_chain(masks) -> bool:
    return all(is_proper_subset(a, b) for a, b in zip(masks, masks[1:]))
