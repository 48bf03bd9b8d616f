"""Literal arbitrary-precision PM+ reference.

Evaluates the block hash (b + sum a_i * s_i) mod p and the level-by-level
tree directly with Python integers, for any prime p = 2^n + k. Nothing
here uses the word-level arithmetic in :mod:`pmplus.arith`; the two are
cross-checked against each other.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from pydantic import BaseModel, Field, model_validator

from pmplus.exceptions import LengthExceededError, PMPlusValidationError

# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10^24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(p: int) -> bool:
    """Primality by trial division for small p, Miller-Rabin above 2^32."""
    if p < 2:
        return False
    if p < 1 << 32:
        if p % 2 == 0:
            return p == 2
        d = 3
        while d * d <= p:
            if p % d == 0:
                return False
            d += 2
        return True
    if any(p % w == 0 for w in _WITNESSES):
        return p in _WITNESSES
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _WITNESSES:
        x = pow(w, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class ToyParams(BaseModel):
    """A (p = 2^n + k, kappa, m, L) configuration for the reference.

    Any prime works, toy or production sized.
    """

    n: int = Field(description="Word width in bits")
    k: int = Field(description="Offset, p = 2^n + k")
    kappa: int = Field(description="Key-range shrink; a_i in [1, p - kappa - 1]")
    m: int = Field(description="Block width")
    levels: int = Field(description="Tree depth L")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check(self) -> ToyParams:
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if not is_prime(self.p):
            raise ValueError(f"2^{self.n} + {self.k} is not prime")
        if self.m < 2 or self.levels < 1:
            raise ValueError("need m >= 2 and at least one level")
        if self.kappa < 0 or self.max_key < 1:
            raise ValueError("kappa leaves no admissible keys")
        if self.max_key * (self.p - 1) >= 1 << (2 * self.n):
            raise ValueError("(p - kappa - 1)(p - 1) must be below 2^(2n)")
        return self

    @property
    def p(self) -> int:
        return (1 << self.n) + self.k

    @property
    def max_key(self) -> int:
        return self.p - self.kappa - 1

    @property
    def admissible_keys(self) -> int:
        """Number of multiplier values, p - 1 - kappa."""
        return self.p - 1 - self.kappa

    @property
    def max_length(self) -> int:
        """Longest string the tree accepts, m^L - 1."""
        return self.m**self.levels - 1


# Exhaustive key enumeration.
TOY17 = ToyParams(n=4, k=1, kappa=2, m=2, levels=3)
# Regularity sweeps.
TOY257 = ToyParams(n=8, k=1, kappa=2, m=4, levels=3)
# Production shapes, for cross-checking the word-level code.
ORACLE_PM32 = ToyParams(n=32, k=15, kappa=28, m=128, levels=8)
ORACLE_PM64 = ToyParams(n=64, k=13, kappa=24, m=128, levels=8)


class ToyKeys(NamedTuple):
    """Keys for one block function. Unvalidated so negative controls can
    use out-of-range values."""

    a: tuple[int, ...]
    b: int


def oracle_block(params: ToyParams, keys: ToyKeys, s: Sequence[int]) -> int:
    """(b + sum a_i * s_i) mod p; ``s`` may be shorter than m (zero-extended)."""
    if len(s) > params.m:
        raise PMPlusValidationError(f"block has {len(s)} values, m={params.m}")
    total = keys.b
    for a, value in zip(keys.a, s):
        total += a * value
    return total % params.p


def oracle_tree(params: ToyParams, keys: Sequence[ToyKeys], s: Sequence[int]) -> int:
    """Tree hash of a character string.

    Appends the character 1, then while more than one value remains:
    zero-pads to a multiple of m, maps each block through the current
    level's function and moves up one level.

    Raises:
        LengthExceededError: If ``s`` has more than m^L - 1 characters.
    """
    if len(s) > params.max_length:
        raise LengthExceededError(
            f"string of {len(s)} characters exceeds {params.max_length}",
            max_words=params.max_length,
        )
    return oracle_tree_sigma(params, keys, list(s) + [1])


def oracle_tree_sigma(params: ToyParams, keys: Sequence[ToyKeys], sigma: Sequence[int]) -> int:
    """The level loop of :func:`oracle_tree` on an already terminated string."""
    if not 1 <= len(sigma) <= params.m**params.levels:
        raise LengthExceededError(
            f"terminated string of {len(sigma)} characters is out of range",
            max_words=params.max_length,
        )
    if len(keys) != params.levels:
        raise PMPlusValidationError(f"expected {params.levels} levels of keys, got {len(keys)}")
    m = params.m
    values = list(sigma)
    level = 0
    while len(values) > 1:
        values += [0] * (-len(values) % m)
        values = [
            oracle_block(params, keys[level], values[i : i + m]) for i in range(0, len(values), m)
        ]
        level += 1
    return values[0]


def oracle_bytes_to_sigma(params: ToyParams, data: bytes) -> list[int]:
    """Terminated character string for a byte input.

    Little-endian words; a trailing partial word gets a 0x01 byte and zero
    fill, otherwise a whole word 1 is appended.
    """
    if params.n % 8:
        raise PMPlusValidationError("byte inputs need a whole number of bytes per word")
    width = params.n // 8
    full = len(data) - len(data) % width
    sigma = [int.from_bytes(data[i : i + width], "little") for i in range(0, full, width)]
    if full < len(data):
        tail = data[full:] + b"\x01" + bytes(width - (len(data) - full) - 1)
        sigma.append(int.from_bytes(tail, "little"))
    else:
        sigma.append(1)
    return sigma


def oracle_digest_value(params: ToyParams, keys: Sequence[ToyKeys], data: bytes) -> int:
    """Tree result for a byte input reduced mod 2^n, before any finalizer."""
    sigma = oracle_bytes_to_sigma(params, data)
    return oracle_tree_sigma(params, keys, sigma) % (1 << params.n)
