"""
Data models for the cut engine
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from common.bitsets import members
from common.models import Graph


@dataclass(frozen=True)
class CutProfile:
    """
    A permutation a_1..a_d together with its path lengths, cuts and G-sequence.

    Positions are 1-based as in a_1..a_d; ell[k-1] is the path length at
    position k. A cut k splits the word between positions k and k+1, so the
    blocks are perm[cuts[i]:cuts[i+1]] with d appended as the last bound.
    """
    perm: Tuple[int, ...]
    ell: Tuple[int, ...]
    cuts: Tuple[int, ...]
    gseq: Tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.perm)

    @property
    def cut_count(self) -> int:
        """c(pi); counts the mandatory cut at 0"""
        return len(self.cuts)

    @property
    def short_gseq(self) -> Tuple[int, ...]:
        return self.gseq[:-1]

    def cumulative_unions(self) -> Tuple[int, ...]:
        """T_j = S_1 u ... u S_j over the short G-sequence"""
        unions = []
        running = 0
        for block in self.short_gseq:
            running |= block
            unions.append(running)
        return tuple(unions)

    def blocks_stable(self, graph: Graph) -> bool:
        return not any(graph.spans_edge(block) for block in self.gseq)

    def block_order_ok(self) -> bool:
        """
        Inside every block, consecutive positions m, m+1 have ell strictly
        falling, or equal ell with a_m > a_{m+1}.
        """
        bounds = list(self.cuts) + [self.d]
        for start, stop in zip(bounds, bounds[1:]):
            for m in range(start, stop - 1):
                if self.ell[m] > self.ell[m + 1]:
                    continue
                if self.ell[m] == self.ell[m + 1] and self.perm[m] > self.perm[m + 1]:
                    continue
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "perm": list(self.perm),
            "ell": list(self.ell),
            "cuts": list(self.cuts),
            "gseq": [members(block) for block in self.gseq],
            "short_gseq": [members(block) for block in self.short_gseq],
        }
