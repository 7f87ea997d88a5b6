"""
Shared data models: labeled simple graphs and colorings
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from common.bitsets import full_mask, mask_of, members
from common.exceptions import ImproperColoringError, InvalidGraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Labeled simple graph on the vertex set [d] = {1..d}.

    edges is kept sorted and duplicate-free with i < j in every pair;
    adjacency[v-1] is the neighbor mask of vertex v.
    """
    d: int
    edges: Tuple[Edge, ...] = ()
    adjacency: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d < 1:
            raise InvalidGraphError(f"vertex count must be positive, got {self.d}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise InvalidGraphError(f"loop at vertex {i}")
            for v in (i, j):
                if not 1 <= v <= self.d:
                    raise InvalidGraphError(f"vertex {v} out of range 1..{self.d}")
            normalized.add((min(i, j), max(i, j)))
        edges = tuple(sorted(normalized))
        adjacency = [0] * self.d
        for i, j in edges:
            adjacency[i - 1] |= 1 << (j - 1)
            adjacency[j - 1] |= 1 << (i - 1)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(adjacency))

    @classmethod
    def from_edges(cls, d: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(d, tuple(tuple(e) for e in edges))

    @classmethod
    def edgeless(cls, d: int) -> "Graph":
        return cls(d, ())

    @classmethod
    def complete(cls, d: int) -> "Graph":
        return cls(d, tuple((i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)))

    @classmethod
    def path(cls, d: int) -> "Graph":
        return cls(d, tuple((i, i + 1) for i in range(1, d)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.d)

    def neighbors(self, v: int) -> int:
        return self.adjacency[v - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i - 1] >> (j - 1) & 1)

    def spans_edge(self, mask: int) -> bool:
        """True iff some edge has both endpoints inside mask"""
        for v in members(mask):
            if self.adjacency[v - 1] & mask:
                return True
        return False

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.d + 1))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Coloring:
    """
    Map vertex -> color in {1..palette}; assignment[v-1] is the color of v.

    Colors need not all be used. Properness is relative to a graph and is
    checked with is_proper().
    """
    palette: int
    assignment: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        if self.palette < 1:
            raise ImproperColoringError(f"palette must be positive, got {self.palette}")
        for v, c in enumerate(self.assignment, start=1):
            if not 1 <= c <= self.palette:
                raise ImproperColoringError(f"vertex {v} has color {c} outside 1..{self.palette}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], d: int, palette: Optional[int] = None) -> "Coloring":
        missing = [v for v in range(1, d + 1) if v not in mapping]
        if missing:
            raise ImproperColoringError(f"coloring is not total: no color for vertices {missing}")
        extra = [v for v in mapping if not 1 <= v <= d]
        if extra:
            raise ImproperColoringError(f"colored vertices {extra} outside 1..{d}")
        assignment = tuple(mapping[v] for v in range(1, d + 1))
        return cls(palette if palette is not None else max(assignment, default=1), assignment)

    @property
    def d(self) -> int:
        return len(self.assignment)

    def color_of(self, v: int) -> int:
        return self.assignment[v - 1]

    def used_colors(self) -> List[int]:
        return sorted(set(self.assignment))

    def classes(self) -> List[Tuple[int, int]]:
        """(color, vertex mask) pairs in increasing color order, nonempty classes only"""
        return [
            (c, mask_of(v for v, cv in enumerate(self.assignment, start=1) if cv == c))
            for c in self.used_colors()
        ]

    def is_proper(self, graph: Graph) -> bool:
        if graph.d != self.d:
            return False
        return all(self.assignment[i - 1] != self.assignment[j - 1] for i, j in graph.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "palette": self.palette,
            "assignment": {str(v): c for v, c in enumerate(self.assignment, start=1)},
        }
