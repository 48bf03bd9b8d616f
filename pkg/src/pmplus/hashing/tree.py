"""Bounded-memory streaming form of the tree construction.

Characters enter level 0. Every m values at level j are hashed with
f_(j+1) and the result is pushed to level j+1, so at most m values are
pending per level. At the end, levels are closed bottom-up: the first
level that ever received exactly one value holds the tree result;
otherwise its pending block is hashed (zero-extended) and pushed up.
This reproduces the level-by-level algorithm, including returning the
single character unhashed when the padded string has length one.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Optional

from pmplus.arith.wide import FieldElement
from pmplus.exceptions import AlreadyFinalizedError, LengthExceededError, PMPlusValidationError
from pmplus.hashing.multilinear import hash_partial_elems, hash_partial_words
from pmplus.models.keys import KeySchedule

logger = logging.getLogger(__name__)


class TreeAccumulator:
    """Streaming tree over characters (n-bit words at the bottom level).

    The caller supplies the full character string, marker included; this
    class does no padding of its own beyond the implicit zero-extension of
    the last block at each level.

    Example:
        >>> tree = TreeAccumulator(schedule)
        >>> tree.push_words([3, 1, 4, 1, 5])
        >>> tree.push(1)  # end marker
        >>> result = tree.finish()
    """

    def __init__(self, schedule: KeySchedule) -> None:
        self._schedule = schedule
        self._params = schedule.params
        self._depth = schedule.depth
        self._max_chars = self._params.m**self._depth

        # Level 0 holds raw words, levels 1..L hold field elements.
        # Level L is not buffered: it only ever receives the final value.
        self._bottom: list[int] = []
        self._upper: list[list[FieldElement]] = [[] for _ in range(self._depth - 1)]
        self._top: Optional[FieldElement] = None
        self._counts = [0] * (self._depth + 1)
        self._finalized = False

    @property
    def schedule(self) -> KeySchedule:
        return self._schedule

    @property
    def chars_consumed(self) -> int:
        """Characters pushed into level 0 so far."""
        return self._counts[0]

    @property
    def pending(self) -> list[int]:
        """Pending value counts per level, bottom first."""
        return [len(self._bottom)] + [len(buf) for buf in self._upper]

    @property
    def finalized(self) -> bool:
        return self._finalized

    def push(self, word: int) -> None:
        """Append one bottom-level character."""
        self.push_words((word,))

    def push_words(self, words: Sequence[int]) -> None:
        """Append bottom-level characters, hashing every full block of m.

        Raises:
            AlreadyFinalizedError: If finish() was already called.
            LengthExceededError: If the string would exceed m^L characters.
        """
        if self._finalized:
            raise AlreadyFinalizedError("tree already finalized")
        if self._counts[0] + len(words) > self._max_chars:
            raise LengthExceededError(
                f"string longer than {self._max_chars} characters for "
                f"m={self._params.m}, L={self._depth}",
                max_words=self._max_chars - 1,
            )
        m = self._params.m
        mask = self._params.mask
        assert all(0 <= w <= mask for w in words), "bottom characters must be n-bit words"
        self._counts[0] += len(words)

        start = 0
        total = len(words)
        while start < total:
            take = min(m - len(self._bottom), total - start)
            self._bottom.extend(words[start : start + take])
            start += take
            if len(self._bottom) == m:
                self._flush_bottom()

    def finish(self) -> FieldElement:
        """Close all levels and return the tree result in [0, p).

        Raises:
            AlreadyFinalizedError: If called twice.
            PMPlusValidationError: If no character was ever pushed.
        """
        if self._finalized:
            raise AlreadyFinalizedError("tree already finalized")
        if self._counts[0] == 0:
            raise PMPlusValidationError("cannot finish an empty string; push the marker first")
        self._finalized = True

        if self._counts[0] == 1:
            return FieldElement(self._bottom[0], 0)
        if self._bottom:
            self._flush_bottom()

        for level in range(1, self._depth + 1):
            if self._counts[level] == 1:
                return self._single(level)
            if level < self._depth and self._upper[level - 1]:
                self._flush_upper(level)

        # The length bound keeps the top level at one value.
        raise AssertionError("tree did not converge to a single value")

    def _single(self, level: int) -> FieldElement:
        if level == self._depth:
            assert self._top is not None
            return self._top
        return self._upper[level - 1][0]

    def _flush_bottom(self) -> None:
        value = hash_partial_words(self._schedule.levels[0], self._bottom, self._params)
        self._bottom.clear()
        self._push_up(1, value)

    def _flush_upper(self, level: int) -> None:
        buf = self._upper[level - 1]
        value = hash_partial_elems(self._schedule.levels[level], buf, self._params)
        logger.debug("flushed %d values at level %d", len(buf), level)
        buf.clear()
        self._push_up(level + 1, value)

    def _push_up(self, level: int, value: FieldElement) -> None:
        self._counts[level] += 1
        if level == self._depth:
            assert self._counts[level] == 1, "top level received a second value"
            self._top = value
            return
        buf = self._upper[level - 1]
        buf.append(value)
        if len(buf) == self._params.m:
            self._flush_upper(level)
