"""Pytest configuration and fixtures for pmplus tests."""

from __future__ import annotations

from pathlib import Path

import pytest

import pmplus
from pmplus.arith.params import WideParams
from pmplus.keys.keygen import generate_keys, generate_schedule
from pmplus.models.keys import KeySchedule

DATA_DIR = Path(pmplus.__file__).parent / "data"


@pytest.fixture(scope="session")
def schedule64() -> KeySchedule:
    """Seeded 64-bit production schedule."""
    return generate_schedule(64, seed=1)


@pytest.fixture(scope="session")
def schedule32() -> KeySchedule:
    """Seeded 32-bit production schedule."""
    return generate_schedule(32, seed=2)


@pytest.fixture(scope="session")
def toy_params() -> WideParams:
    """p = 17 field with two-word blocks."""
    return WideParams(n=4, k=1, kappa=2, m=2)


@pytest.fixture(scope="session")
def toy_schedule(toy_params: WideParams) -> KeySchedule:
    """Five-level schedule over p = 17 (strings up to 31 characters)."""
    return generate_keys(toy_params, 5, seed=3)


@pytest.fixture
def golden_key_32() -> Path:
    """Frozen 32-bit key file used for keyed golden digests."""
    return DATA_DIR / "golden_key_32.pmph"


@pytest.fixture
def golden_key_64() -> Path:
    """Frozen 64-bit key file."""
    return DATA_DIR / "golden_key_64.pmph"
