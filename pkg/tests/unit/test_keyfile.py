"""Unit tests for the binary key file format."""

from __future__ import annotations

import struct
from pathlib import Path

import pytest

from pmplus.arith import WideParams
from pmplus.exceptions import (
    BadMagicError,
    KeyOutOfRangeError,
    PMPlusValidationError,
    TruncatedKeyFileError,
    UnsupportedVersionError,
)
from pmplus.keys.keyfile import (
    MAGIC,
    fingerprint,
    is_keyfile,
    keyfile_size,
    load,
    read_keyfile,
    save,
    write_keyfile,
)
from pmplus.keys.keygen import generate_keys
from pmplus.models.keys import KeySchedule


class TestSave:
    """Tests for save."""

    def test_sizes(self, schedule32: KeySchedule, schedule64: KeySchedule) -> None:
        """Test the exact file sizes."""
        assert keyfile_size(64) == 8264
        assert keyfile_size(32) == 4136
        assert len(save(schedule64)) == 8264
        assert len(save(schedule32)) == 4136

    def test_header(self, schedule64: KeySchedule) -> None:
        """Test magic, version, word size, level count and reserved byte."""
        data = save(schedule64)
        assert data[:8] == b"PMPH\x01\x40\x08\x00"

    def test_layout(self, schedule32: KeySchedule) -> None:
        """Test that each level stores b first, then the multipliers."""
        data = save(schedule32)
        first = schedule32.levels[0]
        b, a1 = struct.unpack_from("<II", data, 8)
        assert (b, a1) == (first.b, first.a[0])
        second_b = struct.unpack_from("<I", data, 8 + 129 * 4)[0]
        assert second_b == schedule32.levels[1].b

    def test_non_production_rejected(self) -> None:
        """Test that toy schedules have no file format."""
        schedule = generate_keys(WideParams(n=32, k=15, kappa=28, m=4), 2, seed=1)
        with pytest.raises(PMPlusValidationError, match="file format"):
            save(schedule)


class TestLoad:
    """Tests for load."""

    @pytest.mark.parametrize("fixture", ["schedule32", "schedule64"])
    def test_roundtrip(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test that a saved schedule loads back equal."""
        schedule = request.getfixturevalue(fixture)
        assert load(save(schedule)) == schedule

    def test_bad_magic(self, schedule32: KeySchedule) -> None:
        """Test rejection of a wrong magic."""
        data = b"XXXX" + save(schedule32)[4:]
        with pytest.raises(BadMagicError):
            load(data)

    def test_short_data(self) -> None:
        """Test that data shorter than a header is a magic error."""
        with pytest.raises(BadMagicError):
            load(MAGIC)

    def test_bad_version(self, schedule32: KeySchedule) -> None:
        """Test an unknown format version."""
        data = bytearray(save(schedule32))
        data[4] = 2
        with pytest.raises(UnsupportedVersionError, match="version 2"):
            load(bytes(data))

    def test_bad_word_size(self, schedule32: KeySchedule) -> None:
        """Test an unknown word size."""
        data = bytearray(save(schedule32))
        data[5] = 16
        with pytest.raises(UnsupportedVersionError, match="word size 16"):
            load(bytes(data))

    def test_bad_levels(self, schedule32: KeySchedule) -> None:
        """Test a level count other than eight."""
        data = bytearray(save(schedule32))
        data[6] = 7
        with pytest.raises(UnsupportedVersionError, match="level count 7"):
            load(bytes(data))

    def test_reserved_byte(self, schedule32: KeySchedule) -> None:
        """Test that the reserved byte must be zero."""
        data = bytearray(save(schedule32))
        data[7] = 1
        with pytest.raises(UnsupportedVersionError, match="reserved"):
            load(bytes(data))

    @pytest.mark.parametrize("delta", [-1, -4, 1])
    def test_wrong_length(self, schedule64: KeySchedule, delta: int) -> None:
        """Test truncated and overlong files."""
        data = save(schedule64)
        data = data[:delta] if delta < 0 else data + b"\x00" * delta
        with pytest.raises(TruncatedKeyFileError, match="expected 8264"):
            load(data)

    def test_zero_multiplier(self, schedule32: KeySchedule) -> None:
        """Test that a zero multiplier is rejected with its position."""
        data = bytearray(save(schedule32))
        # level 3, multiplier index 10
        offset = 8 + 3 * 129 * 4 + (1 + 10) * 4
        data[offset : offset + 4] = b"\x00\x00\x00\x00"
        with pytest.raises(KeyOutOfRangeError) as exc_info:
            load(bytes(data))
        assert (exc_info.value.level, exc_info.value.index) == (3, 10)

    def test_multiplier_above_range(self, schedule64: KeySchedule) -> None:
        """Test that 2^64 - 11 (= p - kappa) is rejected."""
        data = bytearray(save(schedule64))
        offset = 8 + 8
        data[offset : offset + 8] = struct.pack("<Q", 2**64 - 11)
        with pytest.raises(KeyOutOfRangeError):
            load(bytes(data))

    def test_error_message_has_no_key(self, schedule32: KeySchedule) -> None:
        """Test that a rejected key value is not echoed."""
        data = bytearray(save(schedule32))
        data[12:16] = struct.pack("<I", 2**32 - 1)
        with pytest.raises(KeyOutOfRangeError) as exc_info:
            load(bytes(data))
        assert str(2**32 - 1) not in str(exc_info.value)

    def test_golden_files(self, golden_key_32: Path, golden_key_64: Path) -> None:
        """Test that the frozen key files load."""
        assert read_keyfile(golden_key_32).word_size == 32
        assert read_keyfile(golden_key_64).word_size == 64


class TestFileHelpers:
    """Tests for path helpers and fingerprints."""

    def test_write_and_read(self, schedule64: KeySchedule, tmp_path: Path) -> None:
        """Test writing to and reading from disk."""
        path = tmp_path / "k.pmph"
        data = write_keyfile(schedule64, path)
        assert path.read_bytes() == data
        assert read_keyfile(path) == schedule64

    def test_is_keyfile(self, schedule32: KeySchedule) -> None:
        """Test magic detection."""
        assert is_keyfile(save(schedule32))
        assert not is_keyfile(b"PM")
        assert not is_keyfile(b"")

    def test_fingerprint(self, schedule32: KeySchedule, schedule64: KeySchedule) -> None:
        """Test that fingerprints are 16 hex digits and differ per schedule."""
        a, b = fingerprint(save(schedule32)), fingerprint(save(schedule64))
        assert len(a) == 16
        assert a != b
        assert fingerprint(save(schedule32)) == a
