"""
Data models for the coloring ideal
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from common.bitsets import format_set, full_mask, is_proper_subset, members, popcount
from common.exceptions import MonomialError


@dataclass(frozen=True)
class Monomial:
    """
    x_{S_1}^{e_1} ... x_{S_k}^{e_k} in the face ring of the Boolean lattice on [d].

    chain holds the subset masks sorted by cardinality and strictly nested;
    the empty set (mask 0) and [d] are ordinary members. The empty chain is
    the unit monomial.
    """
    d: int
    chain: Tuple[int, ...] = ()
    exponents: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.chain) != len(self.exponents):
            raise MonomialError(f"{len(self.chain)} sets but {len(self.exponents)} exponents")
        pairs = sorted(zip(self.chain, self.exponents), key=lambda p: (popcount(p[0]), p[0]))
        top = full_mask(self.d)
        for mask, exponent in pairs:
            if mask & ~top:
                raise MonomialError(f"set {members(mask)} is not a subset of 1..{self.d}")
            if exponent < 1:
                raise MonomialError(f"exponent {exponent} of x{format_set(mask, self.d)} must be positive")
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            if not is_proper_subset(a, b):
                raise MonomialError(
                    f"x{format_set(a, self.d)} and x{format_set(b, self.d)} are not nested; "
                    f"the product vanishes in the face ring"
                )
        object.__setattr__(self, "chain", tuple(p[0] for p in pairs))
        object.__setattr__(self, "exponents", tuple(int(p[1]) for p in pairs))

    @classmethod
    def unit(cls, d: int) -> "Monomial":
        return cls(d)

    @classmethod
    def square_free(cls, d: int, chain: Tuple[int, ...]) -> "Monomial":
        return cls(d, tuple(chain), (1,) * len(chain))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset:
        return frozenset(self.chain)

    @property
    def is_unit(self) -> bool:
        return not self.chain

    @property
    def is_square_free(self) -> bool:
        return all(e == 1 for e in self.exponents)

    def exponent_of(self, mask: int) -> int:
        for s, e in zip(self.chain, self.exponents):
            if s == mask:
                return e
        return 0

    def __str__(self) -> str:
        from coloring_ideal.syntax import format_monomial
        return format_monomial(self)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain": [members(s) for s in self.chain],
            "exponents": list(self.exponents),
            "degree": self.degree,
        }


@dataclass(frozen=True)
class GenStats:
    """
    Isomorphism invariants of a minimal generating set.

    indeterminate_multiplicities lists, for every subset S occurring in some
    minimal generator, how many generators contain x_S, sorted decreasingly.
    """
    degree_histogram: Dict[int, int] = field(default_factory=dict)
    indeterminate_multiplicities: Tuple[int, ...] = ()

    @property
    def generator_count(self) -> int:
        return sum(self.degree_histogram.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "indeterminate_multiplicities": list(self.indeterminate_multiplicities),
        }
