import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import json
import random
import unittest
from math import factorial
from pathlib import Path

from common.bitsets import mask_of
from common.exceptions import ComplexError, EnumerationBoundError
from common.models import Graph
from config.models import EnumerationBounds
from coloring_complex import (
    build_complex,
    complex_summary,
    complex_to_json,
    complexes_isomorphic,
    edge_of_facet,
    edge_permutation_facets,
    edge_sphere,
    euler_characteristics,
    f_vector,
    faces_by_enumeration,
    facet_from_edge_permutation,
    full_sequence_chains,
    h_vector,
    is_face,
    nontruncated_complex,
    nontruncated_f_vector,
    nontruncated_h_vector,
    nontruncated_h_vector_by_build,
    scan_isomorphic_complexes,
    separation_report,
    sphere_intersection,
    vertex_invariants,
    witness_verifies,
)
from graph_core import (
    all_labeled_graphs,
    chromatic_polynomial,
    count_acyclic_orientations,
    isomorphism_class_representatives,
    load_graph,
    random_graph,
    relabel,
)
from poly_lab import shift_down, tail_polynomial, truncated_boolean_f_vector, w_transform

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture(name: str) -> Graph:
    return load_graph(FIXTURES / f"{name}.txt")


class TestFaces(unittest.TestCase):
    def test_facet_from_edge_permutation(self):
        facet = facet_from_edge_permutation(5, (2, 5), [3, (2, 5), 1, 4])
        self.assertEqual(facet, (mask_of([3]), mask_of([2, 3, 5]), mask_of([1, 2, 3, 5])))
        graph = Graph(5, ((2, 5), (1, 4)))
        self.assertEqual(edge_of_facet(graph, facet), (2, 5))
        with self.assertRaises(ComplexError):
            facet_from_edge_permutation(5, (2, 5), [3, 2, 5, 1, 4])

    def test_edge_of_non_edge_rejected(self):
        facet = facet_from_edge_permutation(4, (1, 2), [3, (1, 2), 4])
        with self.assertRaises(ComplexError):
            edge_of_facet(Graph(4, ((3, 4),)), facet)

    def test_is_face(self):
        graph = fixture("edge_plus_isolated")
        self.assertTrue(is_face(graph, [mask_of([3])]))
        self.assertFalse(is_face(graph, [mask_of([1])]))
        self.assertTrue(is_face(graph, []))
        with self.assertRaises(ComplexError):
            is_face(graph, [mask_of([1, 2, 3])])
        with self.assertRaises(ComplexError):
            is_face(graph, [mask_of([1]), mask_of([2])])

    def test_face_sets_agree(self):
        for graph in (Graph.path(4), Graph.complete(4), fixture("star4"), fixture("chorded_c4_pendant")):
            self.assertEqual(build_complex(graph).faces, faces_by_enumeration(graph))

    def test_small_graphs_rejected(self):
        with self.assertRaises(ComplexError):
            build_complex(Graph.complete(2))
        with self.assertRaises(EnumerationBoundError):
            build_complex(Graph.path(5), EnumerationBounds(max_complex_d=4))


class TestVectors(unittest.TestCase):
    def test_path_on_four_vertices(self):
        complex_ = build_complex(fixture("p4"))
        self.assertEqual(len(complex_.facets), 18)
        self.assertEqual(f_vector(complex_).entries, (1, 12, 18))
        self.assertEqual(h_vector(complex_).entries, (1, 10, 7))
        chars = euler_characteristics(complex_)
        self.assertEqual((chars.euler, chars.reduced, chars.void), (-6, -7, False))

    def test_edgeless_graph_is_void(self):
        complex_ = build_complex(Graph.edgeless(4))
        self.assertTrue(complex_.void)
        self.assertTrue(f_vector(complex_).void)
        self.assertTrue(h_vector(complex_).void)
        chars = euler_characteristics(complex_)
        self.assertEqual((chars.euler, chars.reduced, chars.void), (0, -1, True))

    def test_h_vector_is_transformed_tail(self):
        for graph in all_labeled_graphs(4):
            if not graph.edge_count:
                continue
            tail = tail_polynomial(chromatic_polynomial(graph), 4)
            expected = shift_down(w_transform(tail, 4)).padded(3)
            self.assertEqual(list(h_vector(build_complex(graph)).entries), expected)

    def test_facet_count_and_orientations(self):
        for graph in all_labeled_graphs(4):
            if not graph.edge_count:
                continue
            complex_ = build_complex(graph)
            self.assertEqual(len(complex_.facets), graph.edge_count * factorial(3))
            orientations = count_acyclic_orientations(graph).count
            self.assertEqual(h_vector(complex_).entries[-1], orientations - 1)
            self.assertEqual(-euler_characteristics(complex_).reduced, orientations - 1)

    def test_workers_give_same_complex(self):
        graph = Graph.complete(4)
        self.assertEqual(build_complex(graph, workers=4), build_complex(graph))


class TestSpheres(unittest.TestCase):
    def setUp(self):
        self.path = Graph.path(4)

    def test_edge_sphere_is_truncated_boolean(self):
        for edge in self.path.edges:
            sphere = edge_sphere(self.path, edge)
            self.assertEqual(len(sphere.facets), factorial(3))
            self.assertEqual(f_vector(sphere), truncated_boolean_f_vector(3))
        self.assertEqual(edge_permutation_facets(4, (1, 2)), edge_sphere(self.path, (2, 1)).facets)

    def test_intersections(self):
        for graph in (fixture("two_edges_disjoint_d4"), fixture("two_edges_adjacent_d4")):
            e, f = graph.edges
            meet = sphere_intersection(graph, e, f)
            self.assertEqual(f_vector(meet), truncated_boolean_f_vector(2))

    def test_separation(self):
        report = separation_report(self.path, (1, 2), (2, 3))
        self.assertEqual(report.stray, 0)
        self.assertEqual(report.mixed_components, 0)
        self.assertEqual(report.components, 2)
        self.assertTrue(report.separated)
        self.assertTrue(report.to_dict()["separated"])

    def test_invalid_edges(self):
        with self.assertRaises(ComplexError):
            sphere_intersection(self.path, (1, 2), (2, 1))
        with self.assertRaises(ComplexError):
            edge_sphere(self.path, (1, 3))


class TestIsomorphism(unittest.TestCase):
    def test_relabeled_graph_gives_isomorphic_complex(self):
        graph = fixture("star4")
        c1 = build_complex(graph)
        c2 = build_complex(relabel(graph, (3, 1, 4, 2)))
        result = complexes_isomorphic(c1, c2)
        self.assertTrue(result.isomorphic)
        self.assertTrue(witness_verifies(c1, c2, result.witness))

    def test_path_and_star_differ(self):
        c1, c2 = build_complex(fixture("p4")), build_complex(fixture("star4"))
        self.assertEqual(h_vector(c1), h_vector(c2))
        self.assertFalse(complexes_isomorphic(c1, c2).isomorphic)

    def test_two_edge_graphs_agree(self):
        c1 = build_complex(fixture("two_edges_disjoint_d4"))
        c2 = build_complex(fixture("two_edges_adjacent_d4"))
        result = complexes_isomorphic(c1, c2)
        self.assertTrue(result.isomorphic)
        self.assertTrue(witness_verifies(c1, c2, result.witness))

    def test_two_edge_graphs_split_on_five_vertices(self):
        c1 = build_complex(fixture("two_edges_disjoint_d5"))
        c2 = build_complex(fixture("two_edges_adjacent_d5"))
        self.assertEqual(f_vector(c1), f_vector(c2))
        self.assertEqual(h_vector(c1), h_vector(c2))
        result = complexes_isomorphic(c1, c2)
        self.assertFalse(result.isomorphic)
        self.assertTrue(result.reason.startswith("facet-degree multisets differ"), result.reason)
        self.assertIsNone(result.witness)

    def test_void_and_bound(self):
        void = build_complex(Graph.edgeless(3))
        self.assertTrue(complexes_isomorphic(void, void).isomorphic)
        self.assertFalse(complexes_isomorphic(void, build_complex(Graph.path(3))).isomorphic)
        with self.assertRaises(EnumerationBoundError):
            complexes_isomorphic(build_complex(Graph.path(4)), build_complex(Graph.path(4)),
                                 EnumerationBounds(max_iso_vertices=5))

    def test_invariants_ignore_labels(self):
        c1 = build_complex(Graph.path(4))
        c2 = build_complex(relabel(Graph.path(4), (4, 3, 2, 1)))
        self.assertEqual(sorted(vertex_invariants(c1).values()), sorted(vertex_invariants(c2).values()))

    def test_scan_on_four_vertices(self):
        entries = scan_isomorphic_complexes(4)
        self.assertEqual(len(entries), 2)
        self.assertEqual(sorted(e.isomorphic for e in entries), [False, True])


class TestNonTruncated(unittest.TestCase):
    def test_remark_values(self):
        for name in ("p4", "star4"):
            self.assertEqual(nontruncated_h_vector(fixture(name)).entries, (1, 12, 21, 8))

    def test_single_edge_on_three_vertices(self):
        graph = fixture("edge_plus_isolated")
        complex_ = nontruncated_complex(graph)
        self.assertEqual(nontruncated_f_vector(complex_).entries, (1, 7, 8))
        self.assertEqual(nontruncated_h_vector_by_build(graph).entries, (1, 5, 2))
        self.assertEqual(nontruncated_h_vector(graph).entries, (1, 5, 2))

    def test_formula_matches_build(self):
        graphs = [g for d in (3, 4) for g in all_labeled_graphs(d)]
        graphs += list(isomorphism_class_representatives(5))
        rng = random.Random(3)
        graphs += [random_graph(6, rng) for _ in range(3)]
        for graph in graphs:
            if not graph.edge_count:
                continue
            self.assertEqual(nontruncated_h_vector(graph), nontruncated_h_vector_by_build(graph), msg=graph.to_dict())

    def test_full_sequence_chains_end_in_top(self):
        top = mask_of([1, 2, 3, 4])
        for chain in full_sequence_chains(Graph.path(4)):
            self.assertEqual(chain[-1], top)


class TestExport(unittest.TestCase):
    def test_json_export(self):
        complex_ = build_complex(Graph.path(3))
        payload = json.loads(complex_to_json(complex_))
        self.assertEqual(list(payload), ["d", "facets", "f", "h", "euler", "edges_to_facets"])
        self.assertEqual(payload["d"], 3)
        self.assertEqual(payload["facets"], [[[1]], [[1, 2]], [[2, 3]], [[3]]])
        self.assertEqual(payload["f"], [1, 4])
        self.assertEqual(payload["h"], [1, 3])
        self.assertEqual(payload["euler"], 4)
        self.assertEqual(payload["edges_to_facets"], {"1-2": [1, 3], "2-3": [0, 2]})
        self.assertEqual(complex_summary(complex_), payload)


if __name__ == '__main__':
    unittest.main()
