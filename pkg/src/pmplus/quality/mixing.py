"""Round-trip checks for the finalizer and its inverse."""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np
import numpy.typing as npt

from pmplus.hashing.mix import mix, mix_array, unmix, unmix_array
from pmplus.models.reports import Verdict

logger = logging.getLogger(__name__)

_DTYPES = {32: np.uint32, 64: np.uint64}

CHUNK = 1 << 20


def _check_chunk(z: npt.NDArray[np.unsignedinteger], bits: int) -> tuple[int, Optional[str]]:
    forward = unmix_array(mix_array(z, bits), bits)
    backward = mix_array(unmix_array(z, bits), bits)
    bad = np.flatnonzero((forward != z) | (backward != z))
    if bad.size == 0:
        return 0, None
    return int(bad.size), f"z={int(z[bad[0]]):#x}"


def mix_roundtrip(
    bits: int, iterations: int, seed: int, exhaustive: bool = False
) -> Verdict:
    """unmix(mix(z)) == z and mix(unmix(z)) == z for sampled or all z.

    Args:
        bits: 32 or 64.
        iterations: Random words to test.
        seed: Seed for the sample.
        exhaustive: Test every 32-bit word instead of sampling.
    """
    if exhaustive and bits != 32:
        raise ValueError("exhaustive round-trip is only available for 32-bit words")
    dtype = _DTYPES[bits]
    failures = 0
    first: Optional[str] = None

    if mix(0, bits) != 0 or unmix(0, bits) != 0:
        failures += 1
        first = "zero is not a fixed point"
    for z in (1, (1 << bits) - 1):
        if unmix(mix(z, bits), bits) != z or mix(unmix(z, bits), bits) != z:
            failures += 1
            first = first or f"scalar z={z:#x}"

    rng = np.random.default_rng(seed)
    total = (1 << 32) if exhaustive else iterations
    done = 0
    while done < total:
        size = min(CHUNK, total - done)
        if exhaustive:
            z = np.arange(done, done + size, dtype=np.uint64).astype(dtype)
        else:
            z = rng.integers(0, np.iinfo(dtype).max, size=size, dtype=dtype, endpoint=True)
        if done == 0:
            sample = [int(v) for v in z[:16]]
            mixed = mix_array(z[:16], bits)
            for v, w in zip(sample, mixed):
                if mix(v, bits) != int(w):
                    failures += 1
                    first = first or f"scalar/vector mismatch z={v:#x}"
        bad, where = _check_chunk(z, bits)
        failures += bad
        first = first or where
        done += size
    logger.debug("mix round-trip n=%d: %d words, %d failures", bits, total, failures)

    return Verdict(
        suite="mix",
        passed=failures == 0,
        checked=total + 3,
        failures=failures,
        seed=None if exhaustive else seed,
        parameters={"bits": str(bits), "mode": "exhaustive" if exhaustive else "sampled"},
        first_failure=first,
    )
