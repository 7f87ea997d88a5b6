"""
Vertex subsets of [d] stored as integer masks.

Vertex v (1-based) is bit v-1. Masks never leak 0-based indices: every
function here takes and returns 1-based labels.
"""

from typing import Iterable, List, Tuple


def full_mask(d: int) -> int:
    return (1 << d) - 1


def mask_of(vertices: Iterable[int]) -> int:
    """Mask of a collection of 1-based vertex labels"""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> List[int]:
    """Sorted 1-based labels contained in mask"""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def is_proper_subset(a: int, b: int) -> bool:
    return a != b and a & ~b == 0


def format_set(mask: int, d: int) -> str:
    """Render a subset as {1,3}; {} for the empty set, {*} for [d]"""
    if mask == full_mask(d) and d > 0:
        return "{*}"
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


def chain_to_lists(chain: Tuple[int, ...]) -> List[List[int]]:
    return [members(s) for s in chain]
