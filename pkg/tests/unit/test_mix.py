"""Unit tests for the finalizer."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pmplus.hashing.mix import MIX32, MIX64, mix, mix_array, mix_constants, unmix, unmix_array


class TestMix:
    """Tests for mix and unmix."""

    def test_zero_fixed(self) -> None:
        """Test that zero maps to zero in both widths."""
        assert mix(0, 64) == 0
        assert mix(0, 32) == 0

    def test_known_values(self) -> None:
        """Test mix(1) against hand-computed values."""
        assert mix(1, 64) == 0xC4CEB9FE78E2B0AC
        assert mix(1, 32) == 0xAB3B4E74

    def test_constants(self) -> None:
        """Test the shift and multiplier tables."""
        assert (MIX64.first_shift, MIX64.second_shift) == (33, 33)
        assert (MIX32.first_shift, MIX32.second_shift) == (13, 16)
        assert MIX64.multiplier * MIX64.inverse_multiplier % 2**64 == 1
        assert MIX32.multiplier * MIX32.inverse_multiplier % 2**32 == 1

    def test_unknown_width(self) -> None:
        """Test that only 32 and 64 bits are supported."""
        with pytest.raises(ValueError, match="no finalizer"):
            mix_constants(16)

    @given(st.integers(0, 2**64 - 1))
    def test_roundtrip_64(self, z: int) -> None:
        """Test that unmix inverts mix and vice versa."""
        assert unmix(mix(z, 64), 64) == z
        assert mix(unmix(z, 64), 64) == z

    @given(st.integers(0, 2**32 - 1))
    def test_roundtrip_32(self, z: int) -> None:
        """Test the 32-bit round trip."""
        assert unmix(mix(z, 32), 32) == z
        assert mix(unmix(z, 32), 32) == z

    def test_extremes(self) -> None:
        """Test the all-ones word."""
        for bits in (32, 64):
            top = (1 << bits) - 1
            assert unmix(mix(top, bits), bits) == top


class TestMixArray:
    """Tests for the vectorised finalizer."""

    @pytest.mark.parametrize("bits", [32, 64])
    def test_matches_scalar(self, bits: int) -> None:
        """Test element-wise agreement with the scalar version."""
        rng = np.random.default_rng(7)
        dtype = np.uint32 if bits == 32 else np.uint64
        z = rng.integers(0, np.iinfo(dtype).max, size=256, dtype=dtype, endpoint=True)
        mixed = mix_array(z, bits)
        assert [int(v) for v in mixed] == [mix(int(v), bits) for v in z]

    @pytest.mark.parametrize("bits", [32, 64])
    def test_roundtrip(self, bits: int) -> None:
        """Test unmix_array(mix_array(z)) == z."""
        z = np.arange(0, 4096, dtype=np.uint64)
        assert np.array_equal(unmix_array(mix_array(z, bits), bits), z)

    def test_input_untouched(self) -> None:
        """Test that the input array is not modified."""
        z = np.array([1, 2, 3], dtype=np.uint64)
        mix_array(z, 64)
        assert z.tolist() == [1, 2, 3]
