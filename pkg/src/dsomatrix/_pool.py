"""Chunked, order-preserving process pool with a bounded in-flight window."""

from __future__ import annotations

import itertools
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")

CHUNK_SIZE = 512


def default_jobs() -> int:
    return os.cpu_count() or 1


def chunked(items: Iterable[T], size: int = CHUNK_SIZE) -> Iterator[list[T]]:
    it = iter(items)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def ordered_map(func: Callable[[T], R], tasks: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """``map(func, tasks)`` over ``jobs`` processes, results in task order.

    At most ``2 * jobs`` tasks are in flight, so streaming sources are never
    materialized.
    """
    if jobs <= 1:
        yield from map(func, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = deque()
        for task in tasks:
            pending.append(pool.submit(func, task))
            if len(pending) >= 2 * jobs:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()
