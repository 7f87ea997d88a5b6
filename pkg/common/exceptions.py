"""
Exception hierarchy shared by every chromaplex package
"""

from typing import Optional


class ChromaError(Exception):
    """Base class for all errors raised by chromaplex"""


class GraphFormatError(ChromaError, ValueError):
    """Malformed edge-list or graph6 input"""

    def __init__(self, message: str, line: Optional[int] = None, position: Optional[int] = None):
        self.line = line
        self.position = position
        prefix = ""
        if line is not None:
            prefix = f"line {line}: "
        elif position is not None:
            prefix = f"position {position}: "
        super().__init__(f"{prefix}{message}")


class InvalidGraphError(ChromaError, ValueError):
    """Graph data violating the simple-graph invariants"""


class EnumerationBoundError(ChromaError):
    """A configured enumeration guard was exceeded"""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the configured bound {limit}")


class InvalidPermutationError(ChromaError, ValueError):
    """Sequence that is not a permutation of 1..d"""


class ImproperColoringError(ChromaError, ValueError):
    """Coloring assigning equal colors to adjacent vertices, or malformed coloring data"""


class MonomialError(ChromaError, ValueError):
    """Malformed monomial, or a monomial outside the coloring ideal"""


class PolynomialError(ChromaError, ValueError):
    """Violated precondition of a polynomial transform"""


class ComplexError(ChromaError, ValueError):
    """Invalid request against a coloring complex"""
