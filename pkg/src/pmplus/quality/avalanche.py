"""Avalanche measurement: how often each output bit flips per input bit."""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt

from pmplus.exceptions import PMPlusValidationError
from pmplus.hashing.hasher import PMPlusHasher
from pmplus.models.keys import KeySchedule
from pmplus.models.reports import AvalancheReport
from pmplus.quality.shards import run_shards, shard_seeds, split_work

logger = logging.getLogger(__name__)

# Below this many trials the flip frequencies are too noisy for the 0.03 threshold.
RECOMMENDED_TRIALS = 10_000

_DIGEST_DTYPES = {32: "<u4", 64: "<u8"}


def _digest(schedule: KeySchedule, data: bytes, mixed: bool) -> int:
    hasher = PMPlusHasher(schedule)
    hasher.update(data)
    if mixed:
        return hasher.finalize()
    return hasher.tree_value().lo


def _flip_counts(
    schedule: KeySchedule, length: int, trials: int, seed: int, mixed: bool
) -> npt.NDArray[np.int64]:
    bits = schedule.word_size
    in_bits = 8 * length
    dtype = _DIGEST_DTYPES[bits]
    counts = np.zeros((in_bits, bits), dtype=np.int64)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        data = bytearray(rng.bytes(length))
        base = _digest(schedule, bytes(data), mixed)
        diffs = np.empty(in_bits, dtype=dtype)
        for bit in range(in_bits):
            data[bit >> 3] ^= 1 << (bit & 7)
            diffs[bit] = base ^ _digest(schedule, bytes(data), mixed)
            data[bit >> 3] ^= 1 << (bit & 7)
        flipped = np.unpackbits(
            diffs.view(np.uint8).reshape(in_bits, bits // 8), axis=1, bitorder="little"
        )
        counts += flipped
    return counts


def avalanche_test(
    schedule: KeySchedule,
    lengths: Iterable[int],
    trials: int,
    seed: int,
    shards: int = 1,
    workers: int = 1,
    mixed: bool = True,
) -> list[AvalancheReport]:
    """Flip every input bit of random inputs and tally output bit changes.

    Args:
        schedule: Keys of the function under test.
        lengths: Input sizes in bytes; one report per size.
        trials: Random inputs per size.
        seed: Master seed; shards derive their own seeds from it.
        shards: Work split; fixed for a given seed so results do not
            depend on ``workers``.
        workers: Worker processes.
        mixed: Apply the finalizer. False gives the unmixed tree output,
            useful as a negative control.

    Returns:
        Reports in the order of ``lengths``; empty when ``lengths`` is.
    """
    if trials < 1:
        raise PMPlusValidationError("avalanche needs at least one trial")
    if trials < RECOMMENDED_TRIALS:
        logger.warning(
            "avalanche with %d trials is below the recommended %d", trials, RECOMMENDED_TRIALS
        )
    reports = []
    for index, length in enumerate(lengths):
        seeds = shard_seeds(seed + index, shards)
        sizes = split_work(trials, shards)
        args = [(schedule, length, size, s, mixed) for size, s in zip(sizes, seeds)]
        counts = sum(run_shards(_flip_counts, args, workers))
        bias = np.asarray(counts, dtype=np.float64) / trials
        reports.append(
            AvalancheReport(
                input_length=length,
                trials=trials,
                bits=schedule.word_size,
                bias=bias.reshape(8 * length, schedule.word_size),
                seed=seed,
            )
        )
        logger.debug("avalanche length %d: worst bias %.4f", length, reports[-1].worst_bias)
    return reports
