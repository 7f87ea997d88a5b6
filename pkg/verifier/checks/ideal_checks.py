"""
Checks on the coloring ideal: Hilbert function, membership, codec, generator statistics
"""

import itertools

from common.models import Coloring
from coloring_ideal.codec import decode_monomial, encode_coloring
from coloring_ideal.hilbert import iter_chains, iter_ring_monomials, member_chain_lengths, weigh_chain_lengths
from coloring_ideal.ideal import contains_by_blocks, contains_by_divisibility, contains_monomial, generator_stats
from coloring_ideal.models import Monomial
from coloring_ideal.syntax import format_monomial, parse_monomial
from graph_core.oracles import chromatic_class_signature, chromatic_polynomial
from verifier.checks.base import BaseCheck
from verifier.models import CheckResult


class HilbertIdentityCheck(BaseCheck):
    name = "hilbert_identity"
    claim = "#degree-n monomials of K_G = chi_G(n+1)"

    def run(self) -> CheckResult:
        max_n = self.config.hilbert_max_n
        for graph in self.instances.family(1, self.config.hilbert_max_d):
            chi = chromatic_polynomial(graph)
            lengths = member_chain_lengths(graph, max_n, self.bounds)
            unit = int(contains_monomial(graph, Monomial.unit(graph.d)))
            for n in range(max_n + 1):
                count = unit if n == 0 else weigh_chain_lengths(lengths, n)
                self.record(count == chi(n + 1), f"{graph.to_dict()} at n={n}: {count} != {chi(n + 1)}")
        return self.result()


class MembershipAgreementCheck(BaseCheck):
    name = "membership_agreement"
    claim = "divisibility and stable-block membership agree"

    def run(self) -> CheckResult:
        max_len = self.config.hilbert_max_n
        for graph in self.instances.family(1, self.config.hilbert_max_d):
            disagreement = None
            for chain in itertools.chain([()], iter_chains(graph.d, max_len)):
                monomial = Monomial.square_free(graph.d, chain)
                if contains_by_blocks(graph, monomial) != contains_by_divisibility(graph, monomial, self.bounds):
                    disagreement = format_monomial(monomial)
                    break
            self.record(disagreement is None, f"{graph.to_dict()} on {disagreement}")
        return self.result()


class CodecExampleCheck(BaseCheck):
    name = "codec_examples"
    claim = "worked monomial <-> coloring examples on 7 vertices"

    def run(self) -> CheckResult:
        graph = self.instances.fixture("codec7")
        decoded = decode_monomial(graph, parse_monomial("x{}^2 * x{2,5}^3 * x{2,3,5}^2", graph.d))
        expected = Coloring(8, (8, 3, 6, 8, 3, 8, 8))
        self.record(decoded == expected, f"decoded to {decoded.to_dict()}")

        coloring = Coloring.from_mapping({3: 4, 6: 4, 7: 6, 1: 7, 2: 7, 4: 7, 5: 7}, graph.d, palette=9)
        encoded = format_monomial(encode_coloring(graph, coloring))
        self.record(encoded == "x{}^3 * x{3,6}^2 * x{3,6,7} * x{*}^2", f"encoded to {encoded}")
        return self.result()


class CodecRoundTripCheck(BaseCheck):
    name = "codec_roundtrip"
    claim = "decode(encode(c)) = c and encode(decode(m)) = m"

    def run(self) -> CheckResult:
        max_n = self.config.hilbert_max_n
        for graph in self.instances.family(1, self.config.hilbert_max_d):
            ok = True
            for palette in range(1, max_n + 2):
                for assignment in itertools.product(range(1, palette + 1), repeat=graph.d):
                    coloring = Coloring(palette, assignment)
                    if coloring.is_proper(graph) and decode_monomial(graph, encode_coloring(graph, coloring)) != coloring:
                        ok = False
            for n in range(max_n + 1):
                for monomial in iter_ring_monomials(graph.d, n, self.bounds):
                    if contains_by_blocks(graph, monomial) and encode_coloring(graph, decode_monomial(graph, monomial)) != monomial:
                        ok = False
            self.record(ok, f"{graph.to_dict()}")
        return self.result()


class EquivalentPairCheck(BaseCheck):
    name = "equivalent_pair"
    claim = "same chi and class signature, different generator statistics"

    def run(self) -> CheckResult:
        g, h = self.instances.equivalent_pair()
        self.record(chromatic_polynomial(g) == chromatic_polynomial(h), "chromatic polynomials differ")
        self.record(
            chromatic_class_signature(g, bounds=self.bounds) == chromatic_class_signature(h, bounds=self.bounds),
            "class signatures differ",
        )
        stats_g, stats_h = generator_stats(g, self.bounds), generator_stats(h, self.bounds)
        self.record(stats_g != stats_h, f"generator statistics coincide: {stats_g.to_dict()}")
        return self.result()
