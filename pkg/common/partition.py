"""
Rank-range partitioning for exhaustive sweeps.

A sweep over indices [0, total) is cut into contiguous ranges, each range is
evaluated independently and the partial results are merged with an
associative function, so the result never depends on how the work was split.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import Callable, List, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


def rank_ranges(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most `parts` contiguous, nonempty ranges"""
    parts = max(1, min(parts, total)) if total > 0 else 1
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for k in range(parts):
        stop = start + size + (1 if k < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def partitioned_sweep(
    total: int,
    scan: Callable[[int, int], T],
    merge: Callable[[T, T], T],
    workers: int = 1,
) -> T:
    """Evaluate scan over rank ranges (optionally on a thread pool) and merge in range order"""
    ranges = rank_ranges(total, workers)
    if workers <= 1 or len(ranges) == 1:
        results = [scan(start, stop) for start, stop in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="sweep") as pool:
            results = list(pool.map(lambda r: scan(*r), ranges))
    logger.debug(f"Merged {len(results)} partial results over {total} ranks")
    return reduce(merge, results)
