"""PM+ - almost-delta-universal, regular hashing over pseudo+Mersenne primes."""

from pmplus.arith import PM32, PM64, FieldElement, TripleAccumulator, WideParams
from pmplus.config import SuiteConfig, resolve_seed
from pmplus.exceptions import (
    AlreadyFinalizedError,
    BadMagicError,
    KeyFileError,
    KeyOutOfRangeError,
    LengthExceededError,
    OutOfRangeError,
    PMPlusError,
    PMPlusValidationError,
    TruncatedKeyFileError,
    UnsupportedVersionError,
)
from pmplus.family import PMPlus
from pmplus.hashing import PMPlusHasher, format_digest, hash_oneshot, mix, unmix
from pmplus.keys import generate_schedule, load, save
from pmplus.models import BlockKeys, KeySchedule

__version__ = "0.1.0"

__all__ = [
    # Entry point
    "PMPlus",
    "PMPlusHasher",
    "hash_oneshot",
    "format_digest",
    "mix",
    "unmix",
    # Keys
    "KeySchedule",
    "BlockKeys",
    "generate_schedule",
    "save",
    "load",
    # Parameters
    "WideParams",
    "PM32",
    "PM64",
    "FieldElement",
    "TripleAccumulator",
    # Config
    "SuiteConfig",
    "resolve_seed",
    # Exceptions
    "PMPlusError",
    "PMPlusValidationError",
    "LengthExceededError",
    "AlreadyFinalizedError",
    "OutOfRangeError",
    "KeyFileError",
    "BadMagicError",
    "TruncatedKeyFileError",
    "UnsupportedVersionError",
    "KeyOutOfRangeError",
    # Version
    "__version__",
]
