"""
Path lengths, cuts and G-sequences of a permutation relative to a graph,
and the canonical permutation of a proper coloring.
"""

import logging
from typing import FrozenSet, List, Sequence, Tuple

from common.bitsets import mask_of
from common.exceptions import ImproperColoringError, InvalidPermutationError
from common.models import Coloring, Graph
from cut_engine.models import CutProfile
from cut_engine.rules import CutRule, standard_cut_rule

logger = logging.getLogger(__name__)


def as_permutation(perm: Sequence[int], d: int) -> Tuple[int, ...]:
    """Validate a word as a permutation of 1..d"""
    try:
        values = tuple(int(x) for x in perm)
    except (TypeError, ValueError):
        raise InvalidPermutationError(f"{perm!r} is not a sequence of integers") from None
    if len(values) != d or sorted(values) != list(range(1, d + 1)):
        raise InvalidPermutationError(f"{list(values)} is not a permutation of 1..{d}")
    return values


def parse_permutation(text: str, d: int) -> Tuple[int, ...]:
    """'5236417' for d <= 9, otherwise comma or space separated"""
    text = text.strip()
    if "," in text or " " in text:
        tokens = [t for t in text.replace(",", " ").split() if t]
    else:
        tokens = list(text)
    return as_permutation(tokens, d)


def path_lengths(graph: Graph, perm: Sequence[int]) -> Tuple[int, ...]:
    """ell(k) = 1 + max ell(j) over j < k with a_j adjacent to a_k, else 0"""
    ell: List[int] = []
    for k, a in enumerate(perm):
        best = -1
        neighbors = graph.neighbors(a)
        for j in range(k):
            if neighbors >> (perm[j] - 1) & 1 and ell[j] > best:
                best = ell[j]
        ell.append(best + 1)
    return tuple(ell)


def cut_positions(ell: Sequence[int], perm: Sequence[int], rule: CutRule = standard_cut_rule) -> Tuple[int, ...]:
    d = len(perm)
    return (0,) + tuple(
        k for k in range(1, d)
        if rule(ell[k - 1], ell[k], perm[k - 1], perm[k])
    )


def blocks_between(perm: Sequence[int], cuts: Sequence[int]) -> Tuple[int, ...]:
    """Vertex masks of the segments of perm delimited by the sorted cut positions"""
    bounds = list(cuts) + [len(perm)]
    return tuple(mask_of(perm[start:stop]) for start, stop in zip(bounds, bounds[1:]))


def cut_profile(graph: Graph, perm: Sequence[int], rule: CutRule = standard_cut_rule) -> CutProfile:
    """
    Compute the CutProfile of perm with respect to graph.

    Args:
        graph: labeled graph on [d]
        perm: permutation a_1..a_d of 1..d
        rule: cut rule, the standard three-case rule unless a fault is injected

    Returns:
        CutProfile with ell, cuts and G-sequence filled in
    """
    perm = as_permutation(perm, graph.d)
    ell = path_lengths(graph, perm)
    cuts = cut_positions(ell, perm, rule)
    return CutProfile(perm=perm, ell=ell, cuts=cuts, gseq=blocks_between(perm, cuts))


def canonical_permutation(graph: Graph, coloring: Coloring) -> Tuple[CutProfile, FrozenSet[int]]:
    """
    The permutation a proper coloring comes from.

    Color classes are concatenated in increasing color order; each class is
    sorted by decreasing ell, then decreasing label, where ell only depends on
    the classes already placed. Every cut of the result is 0 or a class
    boundary; the boundaries that are not cuts are returned as extra cuts.
    """
    if coloring.d != graph.d:
        raise ImproperColoringError(f"coloring covers {coloring.d} vertices, graph has {graph.d}")
    if not coloring.is_proper(graph):
        raise ImproperColoringError(f"coloring {coloring.to_dict()['assignment']} is not proper")

    perm: List[int] = []
    ell_of = {}
    boundaries = set()
    for _, cls in coloring.classes():
        placed = []
        for v in (u for u in range(1, graph.d + 1) if cls >> (u - 1) & 1):
            lengths = [ell_of[u] for u in perm if graph.has_edge(u, v)]
            placed.append((max(lengths) + 1 if lengths else 0, v))
        placed.sort(key=lambda item: (-item[0], -item[1]))
        for length, v in placed:
            ell_of[v] = length
            perm.append(v)
        boundaries.add(len(perm))
    boundaries.discard(graph.d)

    profile = cut_profile(graph, perm)
    stray = set(profile.cuts) - boundaries - {0}
    if stray:
        # cannot happen for a proper coloring under the standard rule
        logger.error(f"Cuts {sorted(stray)} of {perm} fall inside color classes")
    extra = frozenset(boundaries - set(profile.cuts))
    logger.debug(f"Canonical permutation {perm}, cuts {profile.cuts}, extra cuts {sorted(extra)}")
    return profile, extra
