"""
Forward map from (permutation, extra cuts, colors) to proper colorings.

A permutation with c cuts yields C(n + d - c, d) n-colorings: keep any subset
of its non-cut positions as extra cuts, then color the resulting blocks with
any increasing color sequence. Over all of S_d this lists every proper
n-coloring exactly once; canonical_permutation is the inverse.
"""

import itertools
import logging
from typing import Iterable, Iterator, Sequence

from common.exceptions import ImproperColoringError
from common.models import Coloring, Graph
from cut_engine.models import CutProfile
from cut_engine.profiles import blocks_between, cut_profile

logger = logging.getLogger(__name__)


def coloring_from_permutation(
    graph: Graph,
    profile: CutProfile,
    extra_cuts: Iterable[int],
    colors: Sequence[int],
    palette: int,
) -> Coloring:
    """Split profile.perm at cuts and extra cuts and give block i the color colors[i]"""
    extra = set(extra_cuts)
    if extra & set(profile.cuts):
        raise ImproperColoringError(f"extra cuts {sorted(extra & set(profile.cuts))} are already cuts")
    if any(not 1 <= k < profile.d for k in extra):
        raise ImproperColoringError(f"extra cuts {sorted(extra)} outside 1..{profile.d - 1}")
    blocks = blocks_between(profile.perm, sorted(set(profile.cuts) | extra))
    if len(colors) != len(blocks):
        raise ImproperColoringError(f"{len(blocks)} blocks need {len(blocks)} colors, got {len(colors)}")
    if any(a >= b for a, b in zip(colors, colors[1:])):
        raise ImproperColoringError(f"block colors {list(colors)} must increase strictly")
    assignment = [0] * profile.d
    for block, color in zip(blocks, colors):
        for v in range(1, profile.d + 1):
            if block >> (v - 1) & 1:
                assignment[v - 1] = color
    coloring = Coloring(palette, tuple(assignment))
    if not coloring.is_proper(graph):
        raise ImproperColoringError(f"blocks of {profile.perm} are not stable in the graph")
    return coloring


def colorings_of_permutation(graph: Graph, perm: Sequence[int], n: int) -> Iterator[Coloring]:
    """All n-colorings whose canonical permutation is perm"""
    profile = cut_profile(graph, perm)
    non_cuts = [k for k in range(1, graph.d) if k not in profile.cuts]
    for size in range(len(non_cuts) + 1):
        for extra in itertools.combinations(non_cuts, size):
            for colors in itertools.combinations(range(1, n + 1), profile.cut_count + size):
                yield coloring_from_permutation(graph, profile, extra, colors, n)
