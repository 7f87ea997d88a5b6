"""
Exact integer polynomials.

IntPolynomial is an immutable coefficient tuple (index = degree) whose ring
operations are carried out by sympy over ZZ, so no intermediate value is
ever rounded or truncated.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from sympy import Poly, Symbol, ZZ

_VAR = Symbol("n")


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients"""
    coeffs: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        return cls(tuple(reversed([int(c) for c in poly.all_coeffs()])))

    def to_sympy(self) -> Poly:
        if not self.coeffs:
            return Poly(0, _VAR, domain=ZZ)
        return Poly(list(reversed(self.coeffs)), _VAR, domain=ZZ)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def padded(self, length: int) -> List[int]:
        """Coefficient list padded with zeros to the given length"""
        return [self.coefficient(k) for k in range(max(length, len(self.coeffs)))]

    def __call__(self, x: int) -> int:
        return int(self.to_sympy().eval(x))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() + other.to_sympy())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() - other.to_sympy())

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial.from_sympy(-self.to_sympy())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return str(self.to_sympy().as_expr())

    def to_dict(self) -> Dict[str, Any]:
        return {"coefficients": list(self.coeffs)}
