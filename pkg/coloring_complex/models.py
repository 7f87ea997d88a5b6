"""
Data models for coloring complexes.

A complex vertex is a vertex subset of the graph (an int mask); a face is a
chain of such subsets stored as a tuple sorted by cardinality.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple

from common.bitsets import chain_to_lists, format_set, popcount
from common.models import Edge

Chain = Tuple[int, ...]


def chain_sort_key(chain: Chain) -> List[List[int]]:
    return chain_to_lists(chain)


def canonical_chain(masks: Iterable[int]) -> Chain:
    return tuple(sorted(masks, key=lambda s: (popcount(s), s)))


@dataclass(frozen=True)
class Complex:
    """
    Simplicial complex given by its facets.

    No facets at all means the void complex, which has not even the empty
    face. edge_classes groups the facets by graph edge for coloring
    complexes and edge-spheres; it stays empty for derived subcomplexes.
    """
    d: int
    facets: FrozenSet[Chain] = frozenset()
    edge_classes: Dict[Edge, FrozenSet[Chain]] = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def from_faces(cls, d: int, faces: Iterable[Chain]) -> "Complex":
        """Complex whose facets are the maximal members of a face set closed under subsets"""
        faces = set(faces)
        facets = set()
        for face in sorted(faces, key=len, reverse=True):
            if not any(set(face) < set(kept) for kept in facets if len(kept) > len(face)):
                facets.add(face)
        return cls(d, frozenset(facets))

    @property
    def void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> Optional[int]:
        if self.void:
            return None
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> FrozenSet[Chain]:
        closure = set()
        for facet in self.facets:
            for size in range(len(facet) + 1):
                closure.update(itertools.combinations(facet, size))
        return frozenset(closure)

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for facet in self.facets for v in facet}, key=lambda s: (popcount(s), s)))

    def sorted_facets(self) -> List[Chain]:
        return sorted(self.facets, key=chain_sort_key)

    def edge_of_facet(self, facet: Chain) -> Optional[Edge]:
        for edge, facets in self.edge_classes.items():
            if facet in facets:
                return edge
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "void": self.void,
            "facets": [chain_to_lists(f) for f in self.sorted_facets()],
        }


@dataclass(frozen=True)
class EulerCharacteristics:
    """euler = sum_{i>=0} (-1)^i f_i and reduced = euler - 1; (0, -1) for the void complex"""
    euler: int
    reduced: int
    void: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"euler": self.euler, "reduced": self.reduced, "void": self.void}


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: Optional[Dict[int, int]] = None
    reason: str = ""

    def to_dict(self, d: Optional[int] = None) -> Dict[str, Any]:
        witness = None
        if self.witness is not None:
            witness = {
                format_set(src, d or 0): format_set(dst, d or 0)
                for src, dst in sorted(self.witness.items(), key=lambda p: (popcount(p[0]), p[0]))
            }
        return {"isomorphic": self.isomorphic, "witness": witness, "reason": self.reason}


@dataclass(frozen=True)
class SeparationReport:
    """
    How the intersection with the f-sphere splits the e-sphere.

    With f = ij, the e-sphere vertices outside the intersection should
    contain exactly one of i, j; `stray` counts those that do not.
    """
    edge: Edge
    other: Edge
    contains_i_only: int
    contains_j_only: int
    stray: int
    components: int
    mixed_components: int

    @property
    def separated(self) -> bool:
        return (
            self.stray == 0
            and self.mixed_components == 0
            and self.components == 2
            and self.contains_i_only > 0
            and self.contains_j_only > 0
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edge": list(self.edge),
            "other": list(self.other),
            "contains_i_only": self.contains_i_only,
            "contains_j_only": self.contains_j_only,
            "stray": self.stray,
            "components": self.components,
            "mixed_components": self.mixed_components,
            "separated": self.separated,
        }


@dataclass(frozen=True)
class ScanEntry:
    """One chromatically equivalent pair of non-isomorphic graphs from a scan"""
    graph1: Any
    graph2: Any
    isomorphic: Optional[bool]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph1": self.graph1.to_dict(),
            "graph2": self.graph2.to_dict(),
            "isomorphic": self.isomorphic,
        }
