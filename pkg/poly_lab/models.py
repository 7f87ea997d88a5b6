"""
Face-count vectors of simplicial complexes
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple


@dataclass(frozen=True)
class FVector:
    """
    (f_{-1}, f_0, ..., f_{e-1}); e is the largest face cardinality.

    The empty tuple stands for the void complex (not even the empty face).
    """
    entries: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @property
    def void(self) -> bool:
        return not self.entries

    @property
    def e(self) -> int:
        return len(self.entries) - 1

    def faces_of_dimension(self, dim: int) -> int:
        """f_dim, with f_{-1} at dim = -1"""
        index = dim + 1
        return self.entries[index] if 0 <= index < len(self.entries) else 0

    def to_dict(self) -> Dict[str, Any]:
        return {"f": list(self.entries)}


@dataclass(frozen=True)
class HVector:
    """(h_0, ..., h_e); empty for the void complex"""
    entries: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @property
    def void(self) -> bool:
        return not self.entries

    @property
    def total(self) -> int:
        return sum(self.entries)

    def to_dict(self) -> Dict[str, Any]:
        return {"h": list(self.entries)}
