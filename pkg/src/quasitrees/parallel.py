"""Process-pool fan-out for subset enumeration and independent instances.

Work is split into bitmask ranges whose histograms are summed, so the result
does not depend on the worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from .ribbon import RibbonGraph, boundary_histogram

T = TypeVar("T")
R = TypeVar("R")


def _hist_job(args) -> Counter:
    G, lo, hi = args
    return boundary_histogram(G, lo, hi)


def parallel_histogram(G: RibbonGraph, threads: int = 1, chunks_per_worker: int = 4) -> Counter:
    total = 1 << G.num_edges
    if threads <= 1 or total < 1 << 12:
        return boundary_histogram(G)
    pieces = threads * chunks_per_worker
    step = max(1, -(-total // pieces))
    jobs = [(G, lo, min(total, lo + step)) for lo in range(0, total, step)]
    out: Counter = Counter()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_hist_job, jobs):
            out.update(part)
    return out


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> list[R]:
    """Order-preserving map; plain loop when threads <= 1."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
