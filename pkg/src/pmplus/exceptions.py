"""PM+ hashing exceptions."""

from __future__ import annotations

from typing import Optional


class PMPlusError(Exception):
    """Base exception for pmplus."""

    pass


class PMPlusValidationError(PMPlusError):
    """Arguments or parameter sets failed validation."""

    pass


class LengthExceededError(PMPlusError):
    """Input is longer than the m^L - 1 words a schedule can hash."""

    def __init__(self, message: str, max_words: Optional[int] = None) -> None:
        super().__init__(message)
        self.max_words = max_words


class AlreadyFinalizedError(PMPlusError):
    """Hasher was used after finalize()."""

    pass


class OutOfRangeError(PMPlusError):
    """A requested size exceeds the configured cap."""

    pass


class KeyFileError(PMPlusError):
    """Key file could not be decoded."""

    pass


class BadMagicError(KeyFileError):
    """Key file does not start with the PMPH magic."""

    pass


class TruncatedKeyFileError(KeyFileError):
    """Key file length does not match its header."""

    pass


class UnsupportedVersionError(KeyFileError):
    """Key file version, word size or level count is not supported."""

    pass


class KeyOutOfRangeError(KeyFileError):
    """A key violates the PM+-Multilinear key range.

    Only the position of the offending key is recorded; the key itself is
    never part of the message.
    """

    def __init__(
        self, message: str, level: Optional[int] = None, index: Optional[int] = None
    ) -> None:
        super().__init__(message)
        self.level = level
        self.index = index
