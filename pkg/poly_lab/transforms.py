"""
Exact polynomial transforms: W-transform, Eulerian polynomials, the binomial-basis
chromatic identity, the tail, and the f <-> h face-vector transforms.

The W-transform always takes the denominator exponent D explicitly:
chi_G uses D = d + 1, the tail uses D = d.
"""

import logging
from math import comb, factorial
from typing import List, Sequence, Union

from sympy.functions.combinatorial.numbers import stirling

from common.exceptions import PolynomialError
from common.polynomial import IntPolynomial
from poly_lab.models import FVector, HVector

logger = logging.getLogger(__name__)

MAX_EULERIAN_D = 20


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def w_transform(p: IntPolynomial, D: int) -> IntPolynomial:
    """
    Numerator W of sum_{n>=0} p(n) t^n = W(t) / (1-t)^D.

    Args:
        p: polynomial of degree at most D - 1
        D: denominator exponent

    Returns:
        W with w_j = sum_{i<=j} (-1)^(j-i) C(D, j-i) p(i), j = 0..D
    """
    if D < 1:
        raise PolynomialError(f"denominator exponent must be positive, got {D}")
    if p.degree > D - 1:
        raise PolynomialError(f"degree {p.degree} too high for (1-t)^{D}")
    values = [p(i) for i in range(D + 1)]
    coeffs = [
        sum((-1) ** (j - i) * binomial(D, j - i) * values[i] for i in range(j + 1))
        for j in range(D + 1)
    ]
    return IntPolynomial(tuple(coeffs))


def series_coefficients(w: IntPolynomial, D: int, count: int) -> List[int]:
    """First `count` coefficients of the power series W(t) / (1-t)^D"""
    return [
        sum(w.coefficient(j) * binomial(n - j + D - 1, D - 1) for j in range(min(n, w.degree) + 1))
        for n in range(count)
    ]


def w_top_coefficient(p: IntPolynomial, D: int) -> int:
    """Closed form of the t^(D-1) coefficient of w_transform(p, D): (-1)^(D-1) p(-1)"""
    return (-1) ** (D - 1) * p(-1)


def shift_down(p: IntPolynomial) -> IntPolynomial:
    """Divide by t; the constant term must vanish"""
    if p.coefficient(0) != 0:
        raise PolynomialError(f"cannot divide by t: constant term is {p.coefficient(0)}")
    return IntPolynomial(p.coeffs[1:])


def eulerian_polynomial(d: int) -> IntPolynomial:
    """
    A_d(t) with sum_{n>=0} n^d t^n = A_d(t) / (1-t)^(d+1).

    Built from A(d, k) = k A(d-1, k) + (d-k+1) A(d-1, k-1), A_0 = 1.
    """
    if d < 0 or d > MAX_EULERIAN_D:
        raise PolynomialError(f"Eulerian polynomial index {d} outside 0..{MAX_EULERIAN_D}")
    row = [1]
    for m in range(1, d + 1):
        prev = row + [0]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = k * prev[k] + (m - k + 1) * prev[k - 1]
    return IntPolynomial(tuple(row))


def chromatic_from_w(w: Union[IntPolynomial, Sequence[int]], d: int, n: int) -> int:
    """
    chi(n) = sum_{k=0}^{d} C(n+k, d) w_{d-k}.

    w is either a coefficient sequence of length exactly d + 1 or a polynomial
    of degree exactly d (w_d counts acyclic orientations, so it never vanishes).
    """
    coeffs = list(w.coeffs) if isinstance(w, IntPolynomial) else [int(c) for c in w]
    if len(coeffs) != d + 1:
        raise PolynomialError(f"W has length {len(coeffs)}, expected {d + 1}")
    return sum(binomial(n + k, d) * coeffs[d - k] for k in range(d + 1))


def tail_polynomial(chi: IntPolynomial, d: int) -> IntPolynomial:
    """T(n) = n^d - chi(n)"""
    if chi.degree != d or chi.leading_coefficient != 1:
        raise PolynomialError(f"expected a monic polynomial of degree {d}, got {chi}")
    return IntPolynomial.monomial(d) - chi


def hilbert_series_numerator(chi: IntPolynomial, d: int) -> IntPolynomial:
    """(1/t) W_G(t): the Hilbert series of K_G is this over (1-t)^(d+1)"""
    return shift_down(w_transform(chi, d + 1))


def f_to_h(f: FVector, e: int) -> HVector:
    """h_k = sum_{i<=k} (-1)^(k-i) C(e-i, k-i) f_{i-1}"""
    if len(f.entries) != e + 1:
        raise PolynomialError(f"f-vector has {len(f.entries)} entries, expected {e + 1}")
    fs = f.entries
    return HVector(tuple(
        sum((-1) ** (k - i) * binomial(e - i, k - i) * fs[i] for i in range(k + 1))
        for k in range(e + 1)
    ))


def h_to_f(h: HVector, e: int) -> FVector:
    """f_{k-1} = sum_{i<=k} C(e-i, k-i) h_i"""
    if len(h.entries) != e + 1:
        raise PolynomialError(f"h-vector has {len(h.entries)} entries, expected {e + 1}")
    hs = h.entries
    return FVector(tuple(
        sum(binomial(e - i, k - i) * hs[i] for i in range(k + 1))
        for k in range(e + 1)
    ))


def truncated_boolean_f_vector(m: int) -> FVector:
    """
    f-vector of the order complex of B_m minus its bottom and top:
    a k-chain of proper nonempty subsets is an ordered partition of [m] into
    k + 1 blocks, so f_{k-1} = (k+1)! S(m, k+1).
    """
    if m < 1:
        raise PolynomialError(f"need at least one atom, got {m}")
    entries = [1] + [factorial(k + 1) * int(stirling(m, k + 1)) for k in range(1, m)]
    return FVector(tuple(entries))


def vector_sum(a: Sequence[int], b: Sequence[int]) -> List[int]:
    length = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(length)]
