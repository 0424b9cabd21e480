"""Deterministic thread-pool helper.

SQUEEZELAB_THREADS caps internal parallelism.  Results are always gathered
in input order, so the output never depends on the schedule.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    env = os.environ.get("SQUEEZELAB_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            return 1
        return max(1, n)
    return max(1, min(4, os.cpu_count() or 1))


def map_ordered(fn: Callable[[T], R], items: Sequence[T] | Iterable[T]) -> list[R]:
    items = list(items)
    n = thread_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
