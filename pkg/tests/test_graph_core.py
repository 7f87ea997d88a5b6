import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import random
import tempfile
import unittest
from pathlib import Path

from common.exceptions import EnumerationBoundError, GraphFormatError, InvalidGraphError
from common.models import Coloring, Graph
from config.models import EnumerationBounds
from graph_core import oracles
from graph_core import (
    all_labeled_graphs,
    chromatic_class_signature,
    chromatic_polynomial,
    count_acyclic_orientations,
    count_colorings,
    encode_graph6,
    format_edge_list,
    is_stable,
    isomorphism_class_representatives,
    load_graph,
    parse_edge_list,
    parse_graph6,
    random_graph,
    random_permutation,
    relabel,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def reference_graph6(graph: Graph) -> str:
    """Bit-by-bit graph6 writer for d <= 62, independent of networkx"""
    d = graph.d
    bits = []
    for j in range(1, d):
        for i in range(j):
            bits.append(1 if graph.has_edge(i + 1, j + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    groups = [bits[k:k + 6] for k in range(0, len(bits), 6)]
    body = "".join(chr(63 + int("".join(map(str, g)), 2)) for g in groups)
    return chr(63 + d) + body


class TestGraphModel(unittest.TestCase):
    def test_edges_are_normalized(self):
        graph = Graph(3, ((2, 1), (1, 2), (3, 2)))
        self.assertEqual(graph.edges, ((1, 2), (2, 3)))
        self.assertEqual(graph.adjacency, (0b010, 0b101, 0b010))
        self.assertTrue(graph.has_edge(2, 1))
        self.assertFalse(graph.has_edge(1, 3))

    def test_invalid_graphs(self):
        with self.assertRaises(InvalidGraphError):
            Graph(3, ((2, 2),))
        with self.assertRaises(InvalidGraphError):
            Graph(3, ((1, 4),))
        with self.assertRaises(InvalidGraphError):
            Graph(0)

    def test_stability(self):
        graph = Graph.path(4)
        self.assertTrue(is_stable(graph, 0b0101))
        self.assertFalse(is_stable(graph, 0b0011))
        self.assertTrue(is_stable(graph, 0))

    def test_coloring_properness(self):
        graph = Graph.complete(3)
        self.assertTrue(Coloring(3, (1, 2, 3)).is_proper(graph))
        self.assertFalse(Coloring(3, (1, 1, 3)).is_proper(graph))
        self.assertEqual(Coloring(4, (1, 2, 3)).palette, 4)


class TestParsers(unittest.TestCase):
    def test_edge_list(self):
        graph = parse_edge_list("# comment\n4\n\n1 2\n2 3\n2 3\n")
        self.assertEqual(graph.d, 4)
        self.assertEqual(graph.edges, ((1, 2), (2, 3)))
        self.assertEqual(parse_edge_list(format_edge_list(graph)), graph)

    def test_edge_list_errors_carry_line_numbers(self):
        with self.assertRaises(GraphFormatError) as ctx:
            parse_edge_list("3\n1 2\n1 5\n")
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn("line 3", str(ctx.exception))
        with self.assertRaises(GraphFormatError):
            parse_edge_list("3\n2 2\n")
        with self.assertRaises(GraphFormatError):
            parse_edge_list("# nothing\n")
        with self.assertRaises(GraphFormatError):
            parse_edge_list("3\n1 x\n")

    def test_graph6_matches_reference_encoder(self):
        rng = random.Random(7)
        for _ in range(30):
            graph = random_graph(rng.randint(1, 10), rng)
            code = encode_graph6(graph)
            self.assertEqual(code, reference_graph6(graph))
            self.assertEqual(parse_graph6(code), graph)

    def test_graph6_known_codes(self):
        self.assertEqual(encode_graph6(Graph.complete(3)), "Bw")
        self.assertEqual(parse_graph6(">>graph6<<Bw"), Graph.complete(3))

    def test_graph6_invalid_character(self):
        with self.assertRaises(GraphFormatError) as ctx:
            parse_graph6("B!")
        self.assertEqual(ctx.exception.position, 1)

    def test_load_graph_dispatch(self):
        self.assertEqual(load_graph(FIXTURES / "k3.txt"), Graph.complete(3))
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "g.g6"
            path.write_text("Bw\n")
            self.assertEqual(load_graph(path), Graph.complete(3))
            with self.assertRaises(GraphFormatError):
                load_graph(Path(tmp) / "missing.txt")


class TestOracles(unittest.TestCase):
    def test_chromatic_polynomials(self):
        self.assertEqual(chromatic_polynomial(Graph.complete(3)).coeffs, (0, 2, -3, 1))
        self.assertEqual(chromatic_polynomial(Graph.path(4)).coeffs, (0, -1, 3, -3, 1))
        self.assertEqual(chromatic_polynomial(Graph.edgeless(3)).coeffs, (0, 0, 0, 1))

    def test_chromatic_memo_is_bounded(self):
        for graph in all_labeled_graphs(5):
            chromatic_polynomial(graph)
        info = oracles._chromatic.cache_info()
        self.assertEqual(info.maxsize, oracles.CHROMATIC_CACHE_SIZE)
        self.assertLessEqual(info.currsize, oracles.CHROMATIC_CACHE_SIZE)

    def test_colorings_match_chromatic_polynomial(self):
        for d in range(1, 5):
            for graph in all_labeled_graphs(d):
                chi = chromatic_polynomial(graph)
                for n in range(4):
                    self.assertEqual(count_colorings(graph, n), chi(n))

    def test_acyclic_orientations(self):
        self.assertEqual(count_acyclic_orientations(Graph.path(4)).count, 8)
        self.assertEqual(count_acyclic_orientations(Graph.complete(3)).count, 6)
        self.assertEqual(count_acyclic_orientations(Graph.edgeless(3)).count, 1)

    def test_acyclic_orientations_match_stanley(self):
        for d in range(1, 5):
            for graph in all_labeled_graphs(d):
                expected = (-1) ** d * chromatic_polynomial(graph)(-1)
                self.assertEqual(count_acyclic_orientations(graph, workers=2).count, expected)

    def test_orientation_guard_falls_back_to_formula(self):
        result = count_acyclic_orientations(Graph.complete(3), EnumerationBounds(max_orientation_edges=2))
        self.assertEqual(result.count, 6)
        self.assertTrue(result.formula_derived)

    def test_coloring_guard(self):
        with self.assertRaises(EnumerationBoundError):
            count_colorings(Graph.path(4), 10, EnumerationBounds(max_colorings=100))

    def test_class_signature(self):
        self.assertEqual(chromatic_class_signature(Graph.complete(3)), {(1, 1, 1): 6})
        self.assertEqual(chromatic_class_signature(Graph(2, ((1, 2),))), {(1, 1): 2})
        # two colors on an edgeless pair: both equal or both different
        self.assertEqual(chromatic_class_signature(Graph.edgeless(2)), {(2,): 2, (1, 1): 2})


class TestOperations(unittest.TestCase):
    def test_relabel(self):
        graph = Graph.path(4)
        self.assertEqual(relabel(graph, (1, 2, 3, 4)), graph)
        self.assertEqual(relabel(graph, (2, 1, 3, 4)).edges, ((1, 2), (1, 3), (3, 4)))
        with self.assertRaises(InvalidGraphError):
            relabel(graph, (1, 1, 2, 3))

    def test_relabel_keeps_chromatic_polynomial(self):
        rng = random.Random(11)
        for _ in range(20):
            d = rng.randint(2, 7)
            graph = random_graph(d, rng)
            sigma = random_permutation(d, rng)
            self.assertEqual(chromatic_polynomial(relabel(graph, sigma)), chromatic_polynomial(graph))

    def test_all_labeled_graphs(self):
        graphs = list(all_labeled_graphs(4))
        self.assertEqual(len(graphs), 64)
        self.assertEqual(len(set(graphs)), 64)

    def test_isomorphism_classes(self):
        self.assertEqual(len(isomorphism_class_representatives(3)), 4)
        self.assertEqual(len(isomorphism_class_representatives(4)), 11)

    def test_seeded_samples_repeat(self):
        first = [random_graph(6, random.Random(5)) for _ in range(3)]
        second = [random_graph(6, random.Random(5)) for _ in range(3)]
        self.assertEqual(first, second)


if __name__ == '__main__':
    unittest.main()
