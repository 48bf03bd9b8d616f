"""Unit tests for key schedule generation and key models."""

from __future__ import annotations

import logging
import math
import random

import numpy as np
import pytest

from pmplus.arith import PM32, PM64, WideParams
from pmplus.exceptions import KeyOutOfRangeError, PMPlusValidationError
from pmplus.keys.keygen import draw_multiplier, generate_keys, generate_schedule
from pmplus.models.keys import BlockKeys, KeySchedule


class TestGenerateSchedule:
    """Tests for generate_schedule."""

    @pytest.mark.parametrize("bits", [32, 64])
    def test_shape(self, bits: int) -> None:
        """Test level count, block width and key ranges."""
        schedule = generate_schedule(bits, seed=42)
        params = schedule.params
        assert schedule.depth == 8
        assert schedule.word_size == bits
        assert schedule.is_production
        for keys in schedule.levels:
            assert len(keys.a) == 128
            assert all(1 <= a <= params.max_key for a in keys.a)
            assert 0 <= keys.b <= params.mask

    def test_seeded_reproducible(self) -> None:
        """Test that one seed gives one schedule."""
        assert generate_schedule(64, seed=7) == generate_schedule(64, seed=7)
        assert generate_schedule(64, seed=7) != generate_schedule(64, seed=8)

    def test_entropy_mode(self) -> None:
        """Test that two unseeded schedules differ."""
        assert generate_schedule(32) != generate_schedule(32)

    def test_unsupported_bits(self) -> None:
        """Test that only 32 and 64 bits are available."""
        with pytest.raises(ValueError, match="unsupported word size"):
            generate_schedule(16, seed=1)

    def test_logs_no_key_material(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test that debug logging never includes keys."""
        with caplog.at_level(logging.DEBUG, logger="pmplus.keys.keygen"):
            schedule = generate_schedule(32, seed=3)
        text = caplog.text
        assert "seeded" in text
        assert str(schedule.levels[0].b) not in text
        assert str(schedule.levels[0].a[0]) not in text

    def test_repr_hides_keys(self) -> None:
        """Test that repr shows the shape only."""
        schedule = generate_schedule(64, seed=3)
        assert repr(schedule) == "KeySchedule(word_size=64, levels=8)"
        assert str(schedule.levels[0].b) not in repr(schedule.levels[0])


class TestDrawMultiplier:
    """Tests for rejection sampling of multipliers."""

    def test_range_small_field(self) -> None:
        """Test that every admissible value appears and nothing else."""
        params = WideParams(n=4, k=1, kappa=2, m=2)
        rng = random.Random(1)
        seen = {draw_multiplier(rng, params) for _ in range(2000)}
        assert seen == set(range(1, 15))

    def test_uniform_pm32(self) -> None:
        """Test range, mean and bucket uniformity of 10^5 PM32 multipliers."""
        rng = random.Random(2024)
        draws = np.array([draw_multiplier(rng, PM32) for _ in range(100_000)], dtype=np.float64)
        top = PM32.max_key
        assert draws.min() >= 1
        assert draws.max() <= top == 2**32 - 14

        midpoint = (1 + top) / 2
        sigma = math.sqrt((top**2 - 1) / 12 / len(draws))
        assert abs(draws.mean() - midpoint) < 3 * sigma

        # 64 equal buckets; 92.0 is the p = 0.01 critical value at 63 degrees of freedom.
        buckets = ((draws - 1) * 64 // top).astype(np.int64)
        counts = np.bincount(buckets, minlength=64)
        expected = len(draws) / 64
        chi2 = float(((counts - expected) ** 2 / expected).sum())
        assert chi2 < 92.0

    def test_generic_schedule(self) -> None:
        """Test non-production parameter sets with any depth."""
        schedule = generate_keys(WideParams(n=8, k=1, kappa=2, m=4), 3, seed=1)
        assert schedule.depth == 3
        assert not schedule.is_production
        assert schedule.max_words == 4**3 - 1


class TestKeySchedule:
    """Tests for KeySchedule validation."""

    def _levels(self, params: WideParams, count: int) -> tuple[BlockKeys, ...]:
        return tuple(BlockKeys(a=(1,) * params.m, b=0) for _ in range(count))

    def test_production_needs_eight_levels(self) -> None:
        """Test that production schedules have exactly eight levels."""
        with pytest.raises(PMPlusValidationError, match="8 levels"):
            KeySchedule(params=PM32, levels=self._levels(PM32, 7))

    def test_zero_multiplier(self) -> None:
        """Test that a zero multiplier is reported by position."""
        levels = list(self._levels(PM64, 8))
        a = list(levels[2].a)
        a[5] = 0
        levels[2] = BlockKeys(a=tuple(a), b=0)
        with pytest.raises(KeyOutOfRangeError) as exc_info:
            KeySchedule(params=PM64, levels=tuple(levels))
        assert (exc_info.value.level, exc_info.value.index) == (2, 5)

    def test_multiplier_too_large(self) -> None:
        """Test that p - kappa is outside the key range."""
        levels = list(self._levels(PM32, 8))
        levels[0] = BlockKeys(a=(PM32.p - PM32.kappa,) + (1,) * 127, b=0)
        with pytest.raises(KeyOutOfRangeError, match="multiplier 0"):
            KeySchedule(params=PM32, levels=tuple(levels))

    def test_largest_multiplier_accepted(self) -> None:
        """Test that p - kappa - 1 is admissible."""
        levels = list(self._levels(PM32, 8))
        levels[0] = BlockKeys(a=(PM32.max_key,) * 128, b=PM32.mask)
        assert KeySchedule(params=PM32, levels=tuple(levels)).depth == 8

    def test_offset_out_of_range(self) -> None:
        """Test that b must fit one word."""
        levels = list(self._levels(PM32, 8))
        levels[7] = BlockKeys(a=(1,) * 128, b=1 << 32)
        with pytest.raises(KeyOutOfRangeError, match="offset"):
            KeySchedule(params=PM32, levels=tuple(levels))

    def test_wrong_width(self) -> None:
        """Test that every level holds m multipliers."""
        levels = list(self._levels(PM32, 8))
        levels[1] = BlockKeys(a=(1,) * 127, b=0)
        with pytest.raises(PMPlusValidationError, match="expected 128 multipliers"):
            KeySchedule(params=PM32, levels=tuple(levels))

    def test_no_levels(self) -> None:
        """Test that an empty schedule is rejected."""
        with pytest.raises(PMPlusValidationError, match="at least one level"):
            KeySchedule(params=WideParams(n=8, k=1, kappa=2, m=4), levels=())
