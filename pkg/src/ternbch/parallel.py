"""Partition-and-merge helper for the enumeration loops.

Work is split into contiguous chunks of an index range; each chunk
returns a private integer histogram and the histograms are summed, so
the result does not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable

import numpy as np


def chunk_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (i < extra)
        out.append((start, stop))
        start = stop
    return out


def merged_histogram(fn: Callable[..., np.ndarray], total: int, args: tuple, workers: int = 1) -> np.ndarray:
    """Sum ``fn(start, stop, *args)`` over a partition of range(total)."""
    if workers <= 1 or total < 2:
        return fn(0, total, *args)
    bounds = chunk_bounds(total, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, a, b, *args) for a, b in bounds]
        parts = [f.result() for f in futures]
    return np.sum(parts, axis=0)
