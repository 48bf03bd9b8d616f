"""Field parameters for pseudo+Mersenne primes p = 2^n + k."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

# Smallest prime above 2^n, as n -> k. Only these (n, k) pairs are accepted.
PSEUDO_MERSENNE_OFFSETS: dict[int, int] = {
    1: 1,
    2: 1,
    3: 3,
    4: 1,
    5: 5,
    6: 3,
    7: 3,
    8: 1,
    16: 1,
    32: 15,
    64: 13,
    128: 51,
}


class WideParams(BaseModel):
    """Word size and field for one PM+ variant.

    ``n`` is the word width in bits, ``k`` the offset of the prime
    ``p = 2**n + k``, ``kappa`` the key-range shrink and ``m`` the block
    width (maximum number of products per accumulator).
    """

    n: int = Field(description="Word width in bits")
    k: int = Field(description="Prime offset, p = 2^n + k")
    kappa: int = Field(description="Key-range shrink; keys lie in [1, p - kappa - 1]")
    m: int = Field(default=128, description="Block width")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_field(self) -> WideParams:
        if PSEUDO_MERSENNE_OFFSETS.get(self.n) != self.k:
            raise ValueError(f"2^{self.n} + {self.k} is not a tabulated pseudo+Mersenne prime")
        if self.m < 2:
            raise ValueError("block width m must be at least 2")
        if self.kappa < 0 or self.p - self.kappa - 1 < 1:
            raise ValueError("kappa leaves no admissible keys")
        if self.p - self.kappa > self.word_modulus:
            raise ValueError("keys must fit in one word: p - kappa <= 2^n")
        # Largest product a * s with a <= p - kappa - 1 and s <= p - 1.
        if self.max_key * (self.p - 1) >= self.word_modulus**2:
            raise ValueError("(p - kappa - 1)(p - 1) must be below 2^(2n)")
        if self.reduction_bound >= 3 * self.word_modulus:
            raise ValueError(
                f"m={self.m} too large for 2^{self.n}+{self.k}: reduction needs v1 <= 2"
            )
        return self

    @property
    def p(self) -> int:
        """The prime modulus."""
        return (1 << self.n) + self.k

    @property
    def word_modulus(self) -> int:
        """2^n."""
        return 1 << self.n

    @property
    def mask(self) -> int:
        """All-ones n-bit word."""
        return (1 << self.n) - 1

    @property
    def word_bytes(self) -> int:
        """Bytes per word; only meaningful when n is a multiple of 8."""
        return self.n // 8

    @property
    def max_key(self) -> int:
        """Largest admissible multiplier, p - kappa - 1."""
        return self.p - self.kappa - 1

    @property
    def reduction_bound(self) -> int:
        """Upper bound on the two-word intermediate of the three-word reduction.

        Sum of the bounds on w0, k^2 * w2, k * u1 and 2^n + k - u0 for
        accumulators holding at most m products.
        """
        k = self.k
        return self.mask + k * k * self.m + k * (k - 1) + self.word_modulus + k - 1


PM32 = WideParams(n=32, k=15, kappa=28, m=128)
PM64 = WideParams(n=64, k=13, kappa=24, m=128)

PRODUCTION_PARAMS: dict[int, WideParams] = {32: PM32, 64: PM64}

# Number of tree levels for the production variants.
PRODUCTION_LEVELS = 8


def params_for_bits(bits: int) -> WideParams:
    """Return the production parameters for a 32- or 64-bit word size."""
    try:
        return PRODUCTION_PARAMS[bits]
    except KeyError:
        raise ValueError(f"unsupported word size: {bits} (expected 32 or 64)") from None
