"""
Order-preserving fan-out for independent subproblems.

Results always come back in input order, so reports assembled from them
are identical to a sequential run regardless of the worker count.
"""

import concurrent.futures
import logging
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger("polystab.parallel")

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    fn: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    chunksize: int = 8,
) -> List[R]:
    """Apply fn to every item; fn must be a picklable module-level callable."""
    batch = list(items)
    if workers <= 1 or len(batch) < 2:
        return [fn(item) for item in batch]

    logger.debug("Dispatching %d tasks to %d worker processes", len(batch), workers)
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, batch, chunksize=chunksize))
