"""Integer-composition enumeration with hard caps and deterministic parallelism.

Effective divisors of a given degree are compositions of that degree over
the vertices.  They are enumerated in colexicographic order (last coordinate
most significant), optionally partitioned by the first vertex's chip count
so partitions can run on a thread pool; results merge deterministically
regardless of schedule.  Exceeding the composition cap raises, never
silently truncates.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, TypeVar

__all__ = [
    "CapExceededError",
    "DEFAULT_MAX_COMPOSITIONS",
    "DEFAULT_THREADS",
    "composition_count",
    "check_composition_cap",
    "compositions_colex",
    "first_coordinate_partitions",
    "map_partitions",
]

DEFAULT_MAX_COMPOSITIONS = 5_000_000
DEFAULT_THREADS = 8
ENV_MAX_COMPOSITIONS = "CHIPFIRE_MAX_COMPOSITIONS"

T = TypeVar("T")


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, cap_name: str, cap_value: int, needed: int):
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.needed = needed
        super().__init__(f"{cap_name}={cap_value} exceeded: enumeration needs {needed}")


def resolve_max_compositions(value: int | None = None) -> int:
    """Cap precedence: explicit argument, then CHIPFIRE_MAX_COMPOSITIONS, then default."""
    if value is not None:
        return value
    env = os.environ.get(ENV_MAX_COMPOSITIONS)
    if env:
        return int(env)
    return DEFAULT_MAX_COMPOSITIONS


def composition_count(total: int, parts: int) -> int:
    return math.comb(total + parts - 1, parts - 1)


def check_composition_cap(total: int, parts: int, max_compositions: int | None = None) -> int:
    cap = resolve_max_compositions(max_compositions)
    needed = composition_count(total, parts)
    if needed > cap:
        raise CapExceededError("max_compositions", cap, needed)
    return needed


def compositions_colex(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ``parts``-tuples of nonnegative ints summing to ``total``, colex ascending."""
    if parts < 1:
        raise ValueError("need at least one part")
    e = [0] * parts
    e[0] = total
    while True:
        yield tuple(e)
        if e[parts - 1] == total:
            return
        # Move one unit onto the first position whose prefix holds any chips.
        acc = 0
        p = 0
        while acc == 0:
            acc += e[p]
            p += 1
        e[p] += 1
        e[0] = acc - 1
        for i in range(1, p):
            e[i] = 0


def _prefixed(first: int, tails: Iterator[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    for tail in tails:
        yield (first,) + tail


def first_coordinate_partitions(total: int, parts: int) -> Iterator[Iterator[tuple[int, ...]]]:
    """Split the colex enumeration by the first coordinate's chip count.

    Within each partition the relative order agrees with the global colex
    order, so per-partition results can be merged deterministically.
    """
    if parts == 1:
        yield iter([(total,)])
        return
    for c in range(total + 1):
        yield _prefixed(c, compositions_colex(total - c, parts - 1))


def map_partitions(
    total: int,
    parts: int,
    worker: Callable[[Iterator[tuple[int, ...]]], T],
    threads: int | None = None,
) -> list[T]:
    """Apply ``worker`` to every partition; results in partition order."""
    threads = DEFAULT_THREADS if threads is None else max(1, threads)
    parts_iter = first_coordinate_partitions(total, parts)
    if threads == 1:
        return [worker(p) for p in parts_iter]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, parts_iter))
