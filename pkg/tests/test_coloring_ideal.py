import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import itertools
import random
import unittest
from pathlib import Path

from common.bitsets import mask_of
from common.exceptions import EnumerationBoundError, MonomialError
from common.models import Coloring, Graph
from config.models import EnumerationBounds
from coloring_ideal import (
    Monomial,
    basic_coloring_monomials,
    contains_by_blocks,
    contains_by_divisibility,
    contains_monomial,
    count_degree_monomials,
    decode_monomial,
    difference_blocks,
    encode_coloring,
    format_monomial,
    generator_stats,
    iter_ring_monomials,
    minimal_generators,
    multiply_by_empty,
    multiply_by_top,
    parse_monomial,
    quotient_hilbert_function,
    ring_hilbert_function,
)
from graph_core import all_labeled_graphs, chromatic_polynomial, load_graph
from poly_lab import tail_polynomial

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


class TestMonomialSyntax(unittest.TestCase):
    def test_parse_and_format(self):
        monomial = parse_monomial("x{2,5}^3 * x{}^2 * x{2,3,5}", 7)
        self.assertEqual(monomial.chain, (0, mask_of([2, 5]), mask_of([2, 3, 5])))
        self.assertEqual(monomial.exponents, (2, 3, 1))
        self.assertEqual(monomial.degree, 6)
        self.assertEqual(format_monomial(monomial), "x{}^2 * x{2,5}^3 * x{2,3,5}")
        self.assertEqual(parse_monomial(format_monomial(monomial), 7), monomial)

    def test_whitespace_and_repeats(self):
        self.assertEqual(parse_monomial(" x{ 1 , 3 } ^2*x{*}", 3), parse_monomial("x{1,3}*x{1,3}*x{*}", 3))
        self.assertEqual(str(parse_monomial("x{1,2,3}", 3)), "x{*}")

    def test_top_factor(self):
        monomial = parse_monomial("x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2", 7)
        self.assertEqual(monomial.chain, (0, mask_of([3, 6]), mask_of([3, 6, 7]), mask_of(range(1, 8))))
        self.assertEqual(monomial.exponents, (3, 2, 1, 2))
        self.assertEqual(parse_monomial("x{*}", 3), Monomial(3, (0b111,), (1,)))
        self.assertEqual(parse_monomial("x{*}*x{*}^2", 3).exponents, (3,))

    def test_random_round_trip(self):
        rng = random.Random(11)
        for _ in range(200):
            d = rng.randint(1, 7)
            order = rng.sample(range(1, d + 1), d)
            sizes = sorted(rng.sample(range(d + 1), rng.randint(1, d + 1)))
            if rng.random() < 0.5 and d not in sizes:
                sizes.append(d)
            chain = tuple(mask_of(order[:k]) for k in sizes)
            exponents = tuple(rng.randint(1, 4) for _ in chain)
            monomial = Monomial(d, chain, exponents)
            text = format_monomial(monomial)
            self.assertEqual(parse_monomial(text, d), monomial, msg=text)

    def test_unit(self):
        self.assertTrue(parse_monomial("1", 4).is_unit)
        self.assertEqual(format_monomial(Monomial.unit(4)), "1")

    def test_malformed(self):
        for text in ("", "y{1}", "x{1}^0", "x{1,}", "x{5}", "x{1} * x{2}"):
            with self.assertRaises(MonomialError, msg=text):
                parse_monomial(text, 4)

    def test_model_validation(self):
        with self.assertRaises(MonomialError):
            Monomial(3, (1,), (0,))
        with self.assertRaises(MonomialError):
            Monomial(3, (1, 2), (1,))
        with self.assertRaises(MonomialError):
            Monomial(2, (0b100,), (1,))


class TestColoringIdeal(unittest.TestCase):
    def setUp(self):
        self.graph = load_graph(FIXTURES / "edge_plus_isolated.txt")

    def test_basic_monomials(self):
        basic = {format_monomial(m) for m in basic_coloring_monomials(self.graph)}
        self.assertEqual(basic, {"x{1}", "x{2}", "x{1,3}", "x{2,3}", "x{1} * x{1,3}", "x{2} * x{2,3}"})

    def test_minimal_generators(self):
        generators = {format_monomial(m) for m in minimal_generators(self.graph)}
        self.assertEqual(generators, {"x{1}", "x{2}", "x{1,3}", "x{2,3}"})
        stats = generator_stats(self.graph)
        self.assertEqual(stats.degree_histogram, {1: 4})
        self.assertEqual(stats.indeterminate_multiplicities, (1, 1, 1, 1))
        self.assertEqual(stats.generator_count, 4)

    def test_edgeless_ideal_is_whole_ring(self):
        generators = minimal_generators(Graph.edgeless(3))
        self.assertEqual(generators, frozenset({Monomial.unit(3)}))
        self.assertTrue(contains_monomial(Graph.edgeless(3), Monomial.unit(3)))

    def test_membership(self):
        self.assertTrue(contains_monomial(self.graph, parse_monomial("x{1}", 3)))
        self.assertFalse(contains_monomial(self.graph, parse_monomial("x{3}", 3)))
        self.assertFalse(contains_monomial(self.graph, parse_monomial("x{}^4 * x{*}", 3)))
        self.assertTrue(contains_monomial(self.graph, parse_monomial("x{}^2 * x{2} * x{*}", 3), method="divisibility"))
        with self.assertRaises(ValueError):
            contains_monomial(self.graph, Monomial.unit(3), method="guess")
        with self.assertRaises(MonomialError):
            contains_monomial(self.graph, Monomial.unit(4))

    def test_difference_blocks(self):
        monomial = parse_monomial("x{} * x{1} * x{1,3}", 3)
        self.assertEqual(difference_blocks(self.graph, monomial), (0, 0b001, 0b100, 0b010))

    def test_membership_methods_agree(self):
        for graph in all_labeled_graphs(4):
            for n in range(3):
                for monomial in iter_ring_monomials(4, n):
                    self.assertEqual(
                        contains_by_blocks(graph, monomial),
                        contains_by_divisibility(graph, monomial),
                        f"{graph.to_dict()} {monomial}",
                    )


class TestHilbertFunction(unittest.TestCase):
    def test_ring_counts(self):
        for d in range(1, 4):
            for n in range(4):
                self.assertEqual(ring_hilbert_function(d, n), (n + 1) ** d)
        self.assertEqual(len(list(iter_ring_monomials(2, 2))), 9)

    def test_ideal_counts_equal_shifted_chromatic_values(self):
        for d in range(1, 4):
            for graph in all_labeled_graphs(d):
                chi = chromatic_polynomial(graph)
                for n in range(4):
                    self.assertEqual(count_degree_monomials(graph, n), chi(n + 1))

    def test_quotient_counts_equal_tail(self):
        graph = Graph.path(4)
        tail = tail_polynomial(chromatic_polynomial(graph), 4)
        for n in range(3):
            self.assertEqual(quotient_hilbert_function(graph, n), tail(n + 1))

    def test_guard(self):
        with self.assertRaises(EnumerationBoundError):
            count_degree_monomials(Graph.path(4), 3, EnumerationBounds(max_monomial_n=2))
        with self.assertRaises(EnumerationBoundError):
            ring_hilbert_function(9, 1)


class TestCodec(unittest.TestCase):
    def setUp(self):
        self.graph = load_graph(FIXTURES / "codec7.txt")

    def test_decode_worked_example(self):
        coloring = decode_monomial(self.graph, parse_monomial("x{}^2 * x{2,5}^3 * x{2,3,5}^2", 7))
        self.assertEqual(coloring, Coloring(8, (8, 3, 6, 8, 3, 8, 8)))

    def test_encode_worked_example(self):
        coloring = Coloring.from_mapping({3: 4, 6: 4, 7: 6, 1: 7, 2: 7, 4: 7, 5: 7}, 7, palette=9)
        self.assertEqual(str(encode_coloring(self.graph, coloring)), "x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2")

    def test_small_examples(self):
        graph = load_graph(FIXTURES / "edge_plus_isolated.txt")
        self.assertEqual(decode_monomial(graph, parse_monomial("x{1,3}", 3)), Coloring(2, (1, 2, 1)))
        self.assertEqual(str(encode_coloring(graph, Coloring(2, (1, 2, 1)))), "x{1,3}")
        edgeless = Graph.edgeless(3)
        self.assertEqual(decode_monomial(edgeless, Monomial.unit(3)), Coloring(1, (1, 1, 1)))
        self.assertTrue(encode_coloring(edgeless, Coloring(1, (1, 1, 1))).is_unit)

    def test_decode_rejects_non_members(self):
        with self.assertRaises(MonomialError):
            decode_monomial(self.graph, parse_monomial("x{2,3}", 7))

    def test_round_trip(self):
        graph = Graph.path(4)
        for palette in range(1, 4):
            for assignment in itertools.product(range(1, palette + 1), repeat=4):
                coloring = Coloring(palette, assignment)
                if coloring.is_proper(graph):
                    monomial = encode_coloring(graph, coloring)
                    self.assertEqual(monomial.degree, palette - 1)
                    self.assertEqual(decode_monomial(graph, monomial), coloring)

    def test_multiplication_moves_colors(self):
        graph = Graph.path(3)
        monomial = encode_coloring(graph, Coloring(2, (1, 2, 1)))
        self.assertEqual(decode_monomial(graph, multiply_by_top(monomial)), Coloring(3, (1, 2, 1)))
        self.assertEqual(decode_monomial(graph, multiply_by_empty(monomial)), Coloring(3, (2, 3, 2)))


if __name__ == '__main__':
    unittest.main()
