"""Monte Carlo digest collision rate over random key schedules.

At production word sizes the true bound (about 10^-8 and below) is far
beyond what sampling can see; the run only checks a loose ceiling. The
exact bound is verified exhaustively on toy fields instead.
"""

from __future__ import annotations

import logging
import random

from pmplus.hashing.hasher import hash_oneshot
from pmplus.keys.keygen import generate_schedule
from pmplus.models.reports import CollisionReport, UniversalityReport
from pmplus.oracle.properties import check_delta_universality
from pmplus.oracle.toy import TOY17, ToyParams
from pmplus.quality.shards import run_shards, shard_seeds, split_work

logger = logging.getLogger(__name__)

DEFAULT_PAIR = (b"a", b"a\x00")


def _collision_shard(bits: int, first: bytes, second: bytes, count: int, seed: int) -> int:
    rng = random.Random(seed)
    hits = 0
    for _ in range(count):
        schedule = generate_schedule(bits, seed=rng.getrandbits(64))
        hits += hash_oneshot(schedule, first) == hash_oneshot(schedule, second)
    return hits


def collision_monte_carlo(
    bits: int,
    schedules: int,
    seed: int,
    pair: tuple[bytes, bytes] = DEFAULT_PAIR,
    ceiling: float = 1e-4,
    shards: int = 1,
    workers: int = 1,
) -> CollisionReport:
    """Fraction of random schedules under which the two inputs collide."""
    first, second = pair
    sizes = split_work(schedules, shards)
    args = [(bits, first, second, size, s) for size, s in zip(sizes, shard_seeds(seed, shards))]
    collisions = sum(run_shards(_collision_shard, args, workers))
    logger.debug("collision run n=%d: %d of %d schedules", bits, collisions, schedules)
    return CollisionReport(
        schedules=schedules, collisions=collisions, ceiling=ceiling, bits=bits, seed=seed
    )


def toy_collision_probability(
    s: list[int], s_prime: list[int], params: ToyParams = TOY17
) -> UniversalityReport:
    """Exact collision probability of one block over every toy key."""
    return check_delta_universality(params, s, s_prime, 0)
