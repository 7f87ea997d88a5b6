"""
Result types of the graph oracles
"""

from dataclasses import dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class OrientationCount:
    """Number of acyclic orientations and how it was obtained"""
    count: int
    formula_derived: bool = False

    def __int__(self) -> int:
        return self.count

    def to_dict(self) -> Dict[str, Any]:
        return {"count": self.count, "formula_derived": self.formula_derived}
