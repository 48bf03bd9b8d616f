"""Streaming PM+ hasher over byte strings.

Bytes are packed little-endian into n-bit words. On finalize a marker is
appended: a 0x01 byte after the last data byte when a partial word is
pending (the rest of the word zero-filled), or a whole word equal to 1
when the length is a multiple of the word size (including empty input).
The tree result in [0, p) is reduced mod 2^n and passed through the
finalizer.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from pmplus.arith.params import WideParams
from pmplus.arith.wide import FieldElement
from pmplus.exceptions import (
    AlreadyFinalizedError,
    LengthExceededError,
    PMPlusValidationError,
)
from pmplus.hashing.mix import mix
from pmplus.hashing.tree import TreeAccumulator
from pmplus.models.keys import KeySchedule

BytesLike = Union[bytes, bytearray, memoryview]

_WORD_DTYPES = {1: "<u1", 2: "<u2", 4: "<u4", 8: "<u8"}


def _word_dtype(params: WideParams) -> str:
    if params.n % 8 or params.word_bytes not in _WORD_DTYPES:
        raise PMPlusValidationError(f"{params.n}-bit words cannot be packed from bytes")
    return _WORD_DTYPES[params.word_bytes]


def unpack_words(data: BytesLike, params: WideParams) -> list[int]:
    """Little-endian n-bit words of ``data``; its length must be a word multiple."""
    dtype = _word_dtype(params)
    return np.frombuffer(data, dtype=dtype).tolist()  # type: ignore[no-any-return]


def marker_word(tail: BytesLike, params: WideParams) -> int:
    """Final character for a trailing partial word (possibly empty)."""
    width = params.word_bytes
    if len(tail) >= width:
        raise PMPlusValidationError("tail must be shorter than one word")
    if not tail:
        return 1
    return int.from_bytes(bytes(tail) + b"\x01" + bytes(width - len(tail) - 1), "little")


def build_sigma(data: BytesLike, params: WideParams) -> list[int]:
    """The character string the tree hashes for ``data``, marker included."""
    width = params.word_bytes
    _word_dtype(params)
    full = len(data) - len(data) % width
    view = memoryview(data)
    return unpack_words(view[:full], params) + [marker_word(view[full:], params)]


def format_digest(value: int, bits: int) -> str:
    """Lowercase fixed-width hex, most significant digit first."""
    return f"{value:0{bits // 4}x}"


class PMPlusHasher:
    """Incremental PM+ hasher.

    Holds at most m(L-1) field elements plus one bottom block and one
    partial word, whatever the input length. Not safe for concurrent
    mutation; any number of hashers may share one KeySchedule.

    Example:
        >>> hasher = PMPlusHasher(schedule)
        >>> hasher.update(b"hello ")
        >>> hasher.update(b"world")
        >>> digest = hasher.finalize()
    """

    def __init__(self, schedule: KeySchedule) -> None:
        """Initialize an empty hasher.

        Args:
            schedule: Keys for every level; the word size must be a whole
                number of bytes.
        """
        self._params = schedule.params
        _word_dtype(self._params)
        self._schedule = schedule
        self._tree = TreeAccumulator(schedule)
        self._tail = bytearray()
        self._bytes = 0
        self._finalized = False

    @property
    def schedule(self) -> KeySchedule:
        return self._schedule

    @property
    def bits(self) -> int:
        """Digest width in bits."""
        return self._params.n

    @property
    def bytes_consumed(self) -> int:
        return self._bytes

    @property
    def words_consumed(self) -> int:
        """Complete data words seen so far."""
        return self._bytes // self._params.word_bytes

    @property
    def pending(self) -> list[int]:
        """Pending value counts per tree level, bottom first."""
        return self._tree.pending

    def update(self, data: BytesLike) -> None:
        """Feed more bytes.

        Raises:
            AlreadyFinalizedError: If the hasher was finalized.
            LengthExceededError: If the input would exceed m^L - 1 words.
        """
        if self._finalized:
            raise AlreadyFinalizedError("hasher already finalized")
        if not data:
            return
        width = self._params.word_bytes
        max_words = self._schedule.max_words
        if (self._bytes + len(data)) // width > max_words:
            raise LengthExceededError(
                f"input longer than {max_words} words for L={self._schedule.depth}",
                max_words=max_words,
            )

        view = memoryview(data).cast("B")
        self._bytes += len(view)
        if self._tail:
            need = width - len(self._tail)
            self._tail += view[:need]
            view = view[need:]
            if len(self._tail) < width:
                return
            self._tree.push_words(unpack_words(self._tail, self._params))
            self._tail.clear()

        full = len(view) - len(view) % width
        if full:
            self._tree.push_words(unpack_words(view[:full], self._params))
        self._tail += view[full:]

    def tree_value(self) -> FieldElement:
        """Append the marker, close the tree and return its result in [0, p).

        Raises:
            AlreadyFinalizedError: If the hasher was finalized.
        """
        if self._finalized:
            raise AlreadyFinalizedError("hasher already finalized")
        self._finalized = True
        self._tree.push(marker_word(self._tail, self._params))
        self._tail.clear()
        return self._tree.finish()

    def finalize(self) -> int:
        """Return the n-bit digest: tree result mod 2^n, then mixed.

        For a field element the value mod 2^n is always its low word.

        Raises:
            AlreadyFinalizedError: If called more than once.
        """
        return mix(self.tree_value().lo, self.bits)

    def hexdigest(self) -> str:
        """Finalize and return the digest as fixed-width lowercase hex."""
        return format_digest(self.finalize(), self.bits)


def hash_oneshot(schedule: KeySchedule, data: BytesLike) -> int:
    """Digest of ``data`` in one call; same result as the streaming path."""
    hasher = PMPlusHasher(schedule)
    hasher.update(data)
    return hasher.finalize()
