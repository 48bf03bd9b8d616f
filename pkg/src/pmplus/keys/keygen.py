"""Key schedule generation.

Seeded mode draws from ``random.Random(seed)`` (Mersenne Twister, CPython's
``getrandbits``); entropy mode draws from ``random.SystemRandom``. Seeded
schedules are reproducible only within this generator; the key file is the
portable artifact.
"""

from __future__ import annotations

import logging
import random
from typing import Optional

from pmplus.arith.params import PRODUCTION_LEVELS, WideParams, params_for_bits
from pmplus.models.keys import BlockKeys, KeySchedule

logger = logging.getLogger(__name__)


def draw_multiplier(rng: random.Random, params: WideParams) -> int:
    """Uniform multiplier in [1, p - kappa - 1] by rejection over n-bit words."""
    max_key = params.max_key
    while True:
        value = rng.getrandbits(params.n)
        if 1 <= value <= max_key:
            return value


def draw_block_keys(rng: random.Random, params: WideParams) -> BlockKeys:
    """One level of keys: m multipliers, then the offset."""
    a = tuple(draw_multiplier(rng, params) for _ in range(params.m))
    b = rng.getrandbits(params.n)
    return BlockKeys(a=a, b=b)


def generate_keys(
    params: WideParams, levels: int, seed: Optional[int] = None
) -> KeySchedule:
    """Draw an independent key schedule for any parameter set.

    Args:
        params: Word size and field.
        levels: Number of tree levels L.
        seed: Seed for reproducible schedules; None uses OS entropy.

    Returns:
        A validated KeySchedule.
    """
    rng: random.Random = random.SystemRandom() if seed is None else random.Random(seed)
    logger.debug(
        "generating %d-bit schedule with %d levels (%s mode)",
        params.n,
        levels,
        "entropy" if seed is None else "seeded",
    )
    return KeySchedule(
        params=params,
        levels=tuple(draw_block_keys(rng, params) for _ in range(levels)),
    )


def generate_schedule(bits: int = 64, seed: Optional[int] = None) -> KeySchedule:
    """Draw a production PM+ schedule (L = 8) for 32- or 64-bit words.

    Example:
        >>> schedule = generate_schedule(64, seed=1)
        >>> schedule.depth
        8
    """
    return generate_keys(params_for_bits(bits), PRODUCTION_LEVELS, seed)
