"""
Checks on permutation cuts, the W-polynomial and the coloring bijection
"""

import itertools
from typing import List

from common.bitsets import mask_of
from common.models import Graph
from cut_engine.bijection import coloring_from_permutation, colorings_of_permutation
from cut_engine.profiles import canonical_permutation, cut_profile
from cut_engine.rules import get_cut_rule
from cut_engine.w_polynomial import chromatic_identity_check, w_polynomial
from graph_core.operations import relabel
from graph_core.oracles import chromatic_polynomial, count_colorings
from poly_lab.transforms import w_transform
from verifier.checks.base import BaseCheck
from verifier.models import CheckResult


class WTheoremCheck(BaseCheck):
    name = "w_theorem"
    claim = "W_G = W-transform of chi_G with D = d+1"

    def graphs(self) -> List[Graph]:
        graphs: List[Graph] = []
        for d in range(1, self.config.exhaustive_d + 1):
            graphs.extend(self.instances.exhaustive(d))
        for d in self.config.sample_d:
            graphs.extend(self.instances.sampled(d))
        return graphs

    def run(self) -> CheckResult:
        rule = get_cut_rule(self.config.fault or "standard")
        for graph in self.graphs():
            expected = w_transform(chromatic_polynomial(graph), graph.d + 1)
            actual = w_polynomial(graph, self.bounds, rule=rule)
            self.record(actual == expected, f"{graph.to_dict()}: {actual.coeffs} != {expected.coeffs}")
        return self.result()


class LabelInvarianceCheck(BaseCheck):
    name = "label_invariance"
    claim = "W_G is unchanged by relabeling"

    def run(self) -> CheckResult:
        rule = get_cut_rule(self.config.fault or "standard")
        for graph, sigma in self.instances.label_pairs():
            before = w_polynomial(graph, self.bounds, rule=rule)
            after = w_polynomial(relabel(graph, sigma), self.bounds, rule=rule)
            self.record(before == after, f"{graph.to_dict()} under {list(sigma)}")
        return self.result()


class ChromaticIdentityCheck(BaseCheck):
    name = "binomial_identity"
    claim = "chi_G(n) = sum_k C(n+k, d) w_(d-k)"

    def run(self) -> CheckResult:
        for graph in self.instances.exhaustive(self.config.exhaustive_d):
            for n in range(self.config.hilbert_max_n + 1):
                self.record(chromatic_identity_check(graph, n, self.bounds), f"{graph.to_dict()} at n={n}")
        return self.result()


class WorkedExampleCheck(BaseCheck):
    name = "worked_example"
    claim = "pi=5236417 on path 1-5 plus 6-7: ell, cuts and G-sequence"

    def run(self) -> CheckResult:
        graph = self.instances.fixture("path5_plus_edge")
        profile = cut_profile(graph, (5, 2, 3, 6, 4, 1, 7))
        self.record(profile.ell == (0, 0, 1, 0, 2, 1, 1), f"ell {profile.ell}")
        self.record(profile.cuts == (0, 2, 4, 6), f"cuts {profile.cuts}")
        expected = tuple(mask_of(b) for b in ((2, 5), (3, 6), (1, 4), (7,)))
        self.record(profile.gseq == expected, f"G-sequence {profile.to_dict()['gseq']}")
        self.record(profile.blocks_stable(graph) and profile.block_order_ok(), "blocks not stable or out of order")

        edgeless = Graph.edgeless(graph.d)
        descending = cut_profile(edgeless, tuple(range(graph.d, 0, -1)))
        self.record(descending.cuts == (0,), f"descending word on the edgeless graph has cuts {descending.cuts}")
        return self.result()


class ColoringBijectionCheck(BaseCheck):
    name = "coloring_bijection"
    claim = "(permutation, extra cuts, colors) <-> proper colorings"

    MAX_D = 4
    MAX_N = 3

    def run(self) -> CheckResult:
        max_d = min(self.MAX_D, self.config.exhaustive_d)
        for d in range(1, max_d + 1):
            for graph in self.instances.exhaustive(d):
                for n in range(1, self.MAX_N + 1):
                    self.record(self._check(graph, n), f"{graph.to_dict()} with n={n}")
        return self.result()

    def _check(self, graph: Graph, n: int) -> bool:
        seen = set()
        for perm in itertools.permutations(range(1, graph.d + 1)):
            for coloring in colorings_of_permutation(graph, perm, n):
                if coloring.assignment in seen or not coloring.is_proper(graph):
                    return False
                seen.add(coloring.assignment)
                profile, extra = canonical_permutation(graph, coloring)
                if profile.perm != perm:
                    return False
                back = coloring_from_permutation(graph, profile, extra, coloring.used_colors(), n)
                if back != coloring:
                    return False
        return len(seen) == count_colorings(graph, n, self.bounds)
