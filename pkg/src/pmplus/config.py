"""Runtime configuration for the pmplus tools."""

from __future__ import annotations

import logging
import os
import secrets
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from pmplus.exceptions import PMPlusValidationError

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "PMPLUS_SEED"


class SuiteConfig(BaseModel):
    """Configuration for quality suites, hashing I/O and benchmarks."""

    seed: Optional[int] = Field(default=None, description="Master seed; None resolves at run time")
    reduction_iterations: int = Field(
        default=10_000_000, description="Random accumulators per word size in the reduction fuzz"
    )
    # 10^4 keeps the 0.03 threshold at 6 sigma; pass --iterations 100000 for the full count.
    avalanche_trials: int = Field(default=10_000, description="Trials per input length")
    avalanche_lengths: tuple[int, ...] = Field(
        default=(4, 8, 16, 32, 64), description="Input lengths in bytes for the avalanche test"
    )
    avalanche_threshold: float = Field(default=0.03, description="Worst tolerated flip bias")
    collision_schedules: int = Field(
        default=100_000, description="Random schedules for the Monte Carlo collision estimate"
    )
    collision_ceiling: float = Field(default=1e-4, description="Loose collision-rate ceiling")
    mix_iterations: int = Field(default=10_000_000, description="Random words per mix round-trip")
    regularity_draws: int = Field(default=50, description="Key draws for the regularity sweep")
    universality_triples: int = Field(default=10, description="(s, s', c) triples to enumerate")
    nh_max_bits: int = Field(default=12, description="Largest n for the NH image-fraction run")
    nh_bits_cap: int = Field(default=14, description="Hard cap on n for the NH bitset")
    shards: int = Field(default=8, description="Work shards for parallel suites")
    workers: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        description="Worker processes for sharded suites",
    )
    stdin_chunk_size: int = Field(default=64 * 1024, description="Read size when hashing streams")
    bench_repetitions: int = Field(default=9, description="Timed repetitions per benchmark row")

    @field_validator("bench_repetitions")
    @classmethod
    def _check_repetitions(cls, value: int) -> int:
        if value < 9:
            raise ValueError("bench_repetitions must be at least 9")
        return value

    @field_validator("shards", "workers", "stdin_chunk_size")
    @classmethod
    def _check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be positive")
        return value

    model_config = {"frozen": True}


def _check_seed(value: int, source: str) -> int:
    if not 0 <= value < 1 << 64:
        raise PMPlusValidationError(f"{source} must be an unsigned 64-bit integer")
    return value


def resolve_seed(explicit: Optional[int] = None) -> int:
    """Pick the effective seed: explicit value, then PMPLUS_SEED, then OS entropy.

    Raises:
        PMPlusValidationError: If PMPLUS_SEED is set but not an integer.
    """
    if explicit is not None:
        return _check_seed(explicit, "seed")
    raw = os.environ.get(SEED_ENV_VAR)
    if raw:
        try:
            value = int(raw, 0)
        except ValueError as e:
            raise PMPlusValidationError(f"{SEED_ENV_VAR} is not an integer: {raw!r}") from e
        return _check_seed(value, SEED_ENV_VAR)
    seed = secrets.randbits(64)
    logger.debug("no seed given, drew one from OS entropy")
    return seed
