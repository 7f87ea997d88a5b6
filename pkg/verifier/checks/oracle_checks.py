"""
Consistency of the independent brute-force oracles
"""

from graph_core.oracles import chromatic_polynomial, count_acyclic_orientations, count_colorings
from verifier.checks.base import BaseCheck
from verifier.models import CheckResult


class OracleConsistencyCheck(BaseCheck):
    name = "oracle_consistency"
    claim = "deletion-contraction chi = coloring counts; AO = (-1)^d chi(-1)"

    def run(self) -> CheckResult:
        for graph in self.instances.family(1, self.config.hilbert_max_d):
            chi = chromatic_polynomial(graph)
            for n in range(self.config.hilbert_max_n + 1):
                counted = count_colorings(graph, n, self.bounds)
                self.record(chi(n) == counted, f"{graph.to_dict()} at n={n}: {chi(n)} != {counted}")
            orientations = count_acyclic_orientations(graph, self.bounds)
            self.record(
                int(orientations) == (-1) ** graph.d * chi(-1),
                f"{graph.to_dict()}: {int(orientations)} acyclic orientations",
            )
        return self.result()
