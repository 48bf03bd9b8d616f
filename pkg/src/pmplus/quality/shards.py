"""Deterministic sharding for randomized suites.

A master seed is split into per-shard seeds with numpy's SeedSequence.
Shard results are combined by commutative counting, so the outcome is the
same whatever the worker count.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, TypeVar

import numpy as np

logger = logging.getLogger(__name__)

T = TypeVar("T")


def shard_seeds(seed: int, shards: int) -> list[int]:
    """One 64-bit seed per shard, derived from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(shards)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def split_work(total: int, shards: int) -> list[int]:
    """Sizes of ``shards`` nearly equal parts of ``total`` (larger parts first)."""
    base, extra = divmod(total, shards)
    return [base + (i < extra) for i in range(shards)]


def run_shards(
    fn: Callable[..., T], args: Sequence[tuple[object, ...]], workers: int = 1
) -> list[T]:
    """Call ``fn(*a)`` for each argument tuple, in a process pool when workers > 1.

    Results come back in argument order.
    """
    if workers <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    logger.debug("running %d shards on %d workers", len(args), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *a) for a in args]
        return [f.result() for f in futures]
