"""Entry object binding a key schedule to hashing and key file I/O."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from pmplus.hashing.hasher import BytesLike, PMPlusHasher, format_digest, hash_oneshot
from pmplus.keys.keyfile import read_keyfile, save, write_keyfile
from pmplus.keys.keygen import generate_schedule
from pmplus.models.keys import KeySchedule
from pmplus.oracle.properties import universality_bound


class PMPlus:
    """One member of the PM+ family, identified by its key schedule.

    Example:
        >>> family = PMPlus.generate(64, seed=1)
        >>> digest = family.hexdigest(b"hello world")
        >>> hasher = family.hasher()
        >>> hasher.update(b"hello ")
        >>> hasher.update(b"world")
        >>> hasher.finalize() == family.digest(b"hello world")
        True
    """

    def __init__(self, schedule: KeySchedule) -> None:
        self._schedule = schedule

    @classmethod
    def generate(cls, bits: int = 64, seed: Optional[int] = None) -> PMPlus:
        """Draw a fresh schedule; ``seed=None`` uses OS entropy."""
        return cls(generate_schedule(bits, seed=seed))

    @classmethod
    def from_keyfile(cls, path: Union[str, Path]) -> PMPlus:
        """Load a schedule from a key file.

        Raises:
            KeyFileError: If the file is malformed or holds out-of-range keys.
        """
        return cls(read_keyfile(path))

    @property
    def schedule(self) -> KeySchedule:
        return self._schedule

    @property
    def bits(self) -> int:
        """Digest width: 32 or 64."""
        return self._schedule.word_size

    @property
    def epsilon(self) -> float:
        """Almost-delta-universality bound 3L / (p - 1 - kappa)."""
        return float(universality_bound(self._schedule.params, self._schedule.depth))

    def hasher(self) -> PMPlusHasher:
        """New streaming hasher for this schedule."""
        return PMPlusHasher(self._schedule)

    def digest(self, data: BytesLike) -> int:
        return hash_oneshot(self._schedule, data)

    def hexdigest(self, data: BytesLike) -> str:
        """Digest as fixed-width lowercase hex."""
        return format_digest(self.digest(data), self.bits)

    def to_bytes(self) -> bytes:
        """The schedule in key file format."""
        return save(self._schedule)

    def save(self, path: Union[str, Path]) -> None:
        write_keyfile(self._schedule, path)

    def __repr__(self) -> str:
        return f"PMPlus(bits={self.bits})"
