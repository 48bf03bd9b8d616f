"""Unit tests for the streaming tree construction."""

from __future__ import annotations

import random

import pytest

from pmplus.arith import FieldElement, field_value
from pmplus.exceptions import AlreadyFinalizedError, LengthExceededError, PMPlusValidationError
from pmplus.hashing.tree import TreeAccumulator
from pmplus.models.keys import KeySchedule
from pmplus.oracle.toy import oracle_tree_sigma
from pmplus.quality.equivalence import toy_keys_for, toy_params_for


def _reference(schedule: KeySchedule, sigma: list[int]) -> int:
    toy = toy_params_for(schedule.params, schedule.depth)
    return oracle_tree_sigma(toy, toy_keys_for(schedule), sigma)


def _stream(schedule: KeySchedule, sigma: list[int]) -> int:
    tree = TreeAccumulator(schedule)
    tree.push_words(sigma)
    return field_value(tree.finish(), schedule.params)


class TestTreeAccumulator:
    """Tests for TreeAccumulator on the p = 17 toy field."""

    def test_single_character_unhashed(self, toy_schedule: KeySchedule) -> None:
        """Test that a one-character string is returned as is."""
        tree = TreeAccumulator(toy_schedule)
        tree.push(5)
        assert tree.finish() == FieldElement(5, 0)

    def test_every_length(self, toy_schedule: KeySchedule) -> None:
        """Test every string length up to m^L against the level-by-level reference."""
        rng = random.Random(11)
        for length in range(1, 33):
            sigma = [rng.getrandbits(4) for _ in range(length)]
            assert _stream(toy_schedule, sigma) == _reference(toy_schedule, sigma), length

    def test_chunking_invariance(self, toy_schedule: KeySchedule) -> None:
        """Test that pushing one character at a time gives the same result."""
        rng = random.Random(12)
        sigma = [rng.getrandbits(4) for _ in range(23)]
        tree = TreeAccumulator(toy_schedule)
        for word in sigma:
            tree.push(word)
        assert field_value(tree.finish(), toy_schedule.params) == _stream(toy_schedule, sigma)

    def test_pending_bounded(self, toy_schedule: KeySchedule) -> None:
        """Test that no level holds m or more pending values."""
        tree = TreeAccumulator(toy_schedule)
        for word in range(31):
            tree.push(word % 16)
            assert all(count < toy_schedule.params.m for count in tree.pending)
        assert tree.chars_consumed == 31

    def test_too_long(self, toy_schedule: KeySchedule) -> None:
        """Test rejection of strings longer than m^L characters."""
        tree = TreeAccumulator(toy_schedule)
        tree.push_words([0] * 32)
        with pytest.raises(LengthExceededError) as exc_info:
            tree.push(1)
        assert exc_info.value.max_words == 31

    def test_empty_string(self, toy_schedule: KeySchedule) -> None:
        """Test that finishing without any character is refused."""
        with pytest.raises(PMPlusValidationError, match="empty string"):
            TreeAccumulator(toy_schedule).finish()

    def test_finish_twice(self, toy_schedule: KeySchedule) -> None:
        """Test that the tree cannot be finished or fed after finishing."""
        tree = TreeAccumulator(toy_schedule)
        tree.push(1)
        tree.finish()
        assert tree.finalized
        with pytest.raises(AlreadyFinalizedError):
            tree.finish()
        with pytest.raises(AlreadyFinalizedError):
            tree.push(2)


class TestProductionTree:
    """Tests for the tree with production parameters."""

    def test_block_boundaries(self, schedule32: KeySchedule) -> None:
        """Test lengths around one and two full blocks against the reference."""
        rng = random.Random(13)
        m = schedule32.params.m
        for length in (2, m - 1, m, m + 1, 2 * m, 2 * m + 1):
            sigma = [rng.getrandbits(32) for _ in range(length)]
            assert _stream(schedule32, sigma) == _reference(schedule32, sigma), length

    @pytest.mark.slow
    def test_second_level_boundary(self, schedule64: KeySchedule) -> None:
        """Test lengths around m^2, where a third level appears."""
        rng = random.Random(14)
        m = schedule64.params.m
        for length in (m * m, m * m + 1):
            sigma = [rng.getrandbits(64) for _ in range(length)]
            assert _stream(schedule64, sigma) == _reference(schedule64, sigma), length
