"""
Text syntax for face-ring monomials: x{2,5}^3 * x{}^2 * x{*}

Braces list a subset of [d]; {} is the empty set and {*} is [d]. Whitespace is
ignored, factors may come in any order and repeated sets multiply. The unit
monomial is written 1. format_monomial prints the canonical form, which
parse_monomial reads back unchanged.
"""

import re
from collections import defaultdict
from typing import Dict

from common.bitsets import format_set, full_mask, mask_of
from common.exceptions import MonomialError
from coloring_ideal.models import Monomial

_FACTOR = re.compile(r"^x\{(\*|[0-9]+(?:,[0-9]+)*|)\}(?:\^([0-9]+))?$")
# factor separators: a * outside braces, so the * of x{*} stays in its factor
_SEPARATOR = re.compile(r"\*(?![^{}]*\})")


def parse_monomial(text: str, d: int) -> Monomial:
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise MonomialError("empty monomial")
    if compact == "1":
        return Monomial.unit(d)
    exponents: Dict[int, int] = defaultdict(int)
    for factor in _SEPARATOR.split(compact):
        match = _FACTOR.match(factor)
        if not match:
            raise MonomialError(f"malformed factor {factor!r}")
        body, power = match.groups()
        if body == "*":
            mask = full_mask(d)
        else:
            vertices = [int(v) for v in body.split(",")] if body else []
            bad = [v for v in vertices if not 1 <= v <= d]
            if bad:
                raise MonomialError(f"vertices {bad} in {factor!r} outside 1..{d}")
            mask = mask_of(vertices)
        exponent = int(power) if power is not None else 1
        if exponent < 1:
            raise MonomialError(f"exponent of {factor!r} must be positive")
        exponents[mask] += exponent
    chain = tuple(exponents)
    return Monomial(d, chain, tuple(exponents[s] for s in chain))


def format_monomial(monomial: Monomial) -> str:
    if monomial.is_unit:
        return "1"
    factors = []
    for mask, exponent in zip(monomial.chain, monomial.exponents):
        factor = "x" + format_set(mask, monomial.d)
        if exponent > 1:
            factor += f"^{exponent}"
        factors.append(factor)
    return " * ".join(factors)
