"""Unit tests for the PMPlus entry object."""

from __future__ import annotations

from pathlib import Path

import pmplus
from pmplus import PMPlus


class TestPMPlus:
    """Tests for PMPlus."""

    def test_generate(self) -> None:
        """Test seeded construction."""
        family = PMPlus.generate(64, seed=1)
        assert family.bits == 64
        assert family.schedule.depth == 8
        assert repr(family) == "PMPlus(bits=64)"

    def test_digest_matches_streaming(self) -> None:
        """Test that one-shot and streaming digests agree."""
        family = PMPlus.generate(32, seed=2)
        hasher = family.hasher()
        hasher.update(b"hello ")
        hasher.update(b"world")
        assert hasher.finalize() == family.digest(b"hello world")

    def test_from_keyfile(self, golden_key_32: Path) -> None:
        """Test the keyed golden digests through the facade."""
        family = PMPlus.from_keyfile(golden_key_32)
        assert family.hexdigest(b"abcd") == "d8858eac"
        assert family.hexdigest(b"abcdefgh") == "b7ee5120"
        assert family.hexdigest(b"") == "ab3b4e74"

    def test_save_roundtrip(self, tmp_path: Path) -> None:
        """Test saving and reloading a family."""
        family = PMPlus.generate(64, seed=3)
        path = tmp_path / "k.pmph"
        family.save(path)
        assert path.read_bytes() == family.to_bytes()
        assert PMPlus.from_keyfile(path).digest(b"abc") == family.digest(b"abc")

    def test_epsilon(self) -> None:
        """Test the family bound 3L / (p - 1 - kappa)."""
        assert PMPlus.generate(64, seed=4).epsilon == 24 / (2**64 - 12)
        assert PMPlus.generate(32, seed=4).epsilon == 24 / (2**32 - 14)


class TestPackage:
    """Tests for the top-level package."""

    def test_version(self) -> None:
        """Test the version string."""
        assert pmplus.__version__ == "0.1.0"

    def test_exports(self) -> None:
        """Test that the public names resolve."""
        for name in pmplus.__all__:
            assert hasattr(pmplus, name), name
