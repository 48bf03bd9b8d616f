"""Throughput benchmark over a geometric length grid."""

from __future__ import annotations

import logging
import statistics
import time
from collections.abc import Sequence

import numpy as np

from pmplus.exceptions import PMPlusValidationError
from pmplus.hashing.hasher import PMPlusHasher
from pmplus.models.keys import KeySchedule
from pmplus.models.reports import BenchReport, BenchRow

logger = logging.getLogger(__name__)

# 64 B to 256 kB, factor 4.
BENCH_LENGTHS: tuple[int, ...] = (64, 256, 1024, 4096, 16384, 65536, 262144)

MIN_REPETITIONS = 9


def _time_once(schedule: KeySchedule, data: bytes) -> int:
    start = time.perf_counter_ns()
    hasher = PMPlusHasher(schedule)
    hasher.update(data)
    hasher.finalize()
    return max(1, time.perf_counter_ns() - start)


def run_bench(
    schedule: KeySchedule,
    lengths: Sequence[int] = BENCH_LENGTHS,
    repetitions: int = MIN_REPETITIONS,
    seed: int = 0,
) -> BenchReport:
    """Median throughput per length after one warm-up run.

    The input buffer is filled with random bytes up front so page faults
    stay out of the timed region.
    """
    if repetitions < MIN_REPETITIONS:
        raise PMPlusValidationError(f"need at least {MIN_REPETITIONS} repetitions")
    buffer = np.random.default_rng(seed).bytes(max(lengths, default=0))
    rows = []
    for length in lengths:
        data = buffer[:length]
        _time_once(schedule, data)
        median_ns = statistics.median(_time_once(schedule, data) for _ in range(repetitions))
        rows.append(BenchRow(length=length, bytes_per_ns=length / median_ns))
        logger.debug("bench %d bytes: %.0f ns median", length, median_ns)
    return BenchReport(variant=schedule.word_size, repetitions=repetitions, rows=tuple(rows))
