"""Binary key file format.

Layout (all integers little-endian)::

    magic     4 bytes   b"PMPH"
    version   1 byte    0x01
    word_size 1 byte    0x20 or 0x40
    levels    1 byte    0x08
    reserved  1 byte    0x00
    payload   for each level f_1..f_L: b, then a_1..a_128, one word each

p and kappa are implied by the word size and are not stored.
"""

from __future__ import annotations

import hashlib
import struct
from pathlib import Path
from typing import Union

from pmplus.arith.params import PRODUCTION_LEVELS, params_for_bits
from pmplus.exceptions import (
    BadMagicError,
    PMPlusValidationError,
    TruncatedKeyFileError,
    UnsupportedVersionError,
)
from pmplus.models.keys import BlockKeys, KeySchedule

MAGIC = b"PMPH"
VERSION = 0x01

_HEADER = struct.Struct("<4sBBBB")
_WORD_FORMATS = {32: "I", 64: "Q"}

PathLike = Union[str, Path]


def keyfile_size(bits: int, levels: int = PRODUCTION_LEVELS) -> int:
    """Exact file size: 8 + L * (1 + m) * (bits / 8)."""
    params = params_for_bits(bits)
    return _HEADER.size + levels * (1 + params.m) * params.word_bytes


def _level_struct(bits: int, m: int) -> struct.Struct:
    return struct.Struct(f"<{1 + m}{_WORD_FORMATS[bits]}")


def is_keyfile(data: bytes) -> bool:
    """Check whether data starts with the key file magic."""
    return len(data) >= len(MAGIC) and data[: len(MAGIC)] == MAGIC


def save(schedule: KeySchedule) -> bytes:
    """Serialize a production schedule.

    Raises:
        PMPlusValidationError: If the schedule is not a 32- or 64-bit PM+ schedule.
    """
    if not schedule.is_production:
        raise PMPlusValidationError("only 32- and 64-bit PM+ schedules have a file format")
    bits = schedule.word_size
    level = _level_struct(bits, schedule.params.m)
    parts = [_HEADER.pack(MAGIC, VERSION, bits, schedule.depth, 0)]
    parts.extend(level.pack(keys.b, *keys.a) for keys in schedule.levels)
    return b"".join(parts)


def load(data: bytes) -> KeySchedule:
    """Parse and validate a key file.

    Raises:
        BadMagicError: If the magic is missing or the data is shorter than a header.
        UnsupportedVersionError: If version, word size, level count or the
            reserved byte is not recognised.
        TruncatedKeyFileError: If the length does not match the header.
        KeyOutOfRangeError: If any key violates its range.
    """
    if len(data) < _HEADER.size or not is_keyfile(data):
        raise BadMagicError("not a PM+ key file (bad magic or shorter than a header)")
    _, version, bits, levels, reserved = _HEADER.unpack_from(data)
    if version != VERSION:
        raise UnsupportedVersionError(f"unsupported key file version {version}")
    if bits not in _WORD_FORMATS:
        raise UnsupportedVersionError(f"unsupported word size {bits}")
    if levels != PRODUCTION_LEVELS:
        raise UnsupportedVersionError(f"unsupported level count {levels}")
    if reserved != 0:
        raise UnsupportedVersionError("reserved header byte must be zero")

    expected = keyfile_size(bits, levels)
    if len(data) != expected:
        raise TruncatedKeyFileError(f"key file is {len(data)} bytes, expected {expected}")

    params = params_for_bits(bits)
    level = _level_struct(bits, params.m)
    blocks = []
    for offset in range(_HEADER.size, expected, level.size):
        b, *a = level.unpack_from(data, offset)
        blocks.append(BlockKeys(a=tuple(a), b=b))
    # KeySchedule validation raises KeyOutOfRangeError on bad keys.
    return KeySchedule(params=params, levels=tuple(blocks))


def fingerprint(data: bytes) -> str:
    """Short identifier for a key file: the first 16 hex digits of its SHA-256."""
    return hashlib.sha256(data).hexdigest()[:16]


def write_keyfile(schedule: KeySchedule, path: PathLike) -> bytes:
    """Save ``schedule`` to ``path`` and return the bytes written."""
    data = save(schedule)
    Path(path).write_bytes(data)
    return data


def read_keyfile(path: PathLike) -> KeySchedule:
    """Load and validate the key file at ``path``."""
    return load(Path(path).read_bytes())
