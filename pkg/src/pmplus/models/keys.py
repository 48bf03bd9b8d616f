"""Key material models."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from pmplus.arith.params import PRODUCTION_LEVELS, PRODUCTION_PARAMS, WideParams
from pmplus.exceptions import KeyOutOfRangeError, PMPlusValidationError


class BlockKeys(BaseModel):
    """Multipliers a_1..a_m and offset b for one PM+-Multilinear function.

    Key values are excluded from repr so they never end up in logs.
    """

    a: tuple[int, ...] = Field(repr=False, description="Multipliers in [1, p - kappa - 1]")
    b: int = Field(repr=False, description="Offset in [0, 2^n)")

    model_config = {"frozen": True}

    def check(self, params: WideParams, level: int = 0) -> None:
        """Validate key ranges against ``params``.

        Raises:
            KeyOutOfRangeError: If any multiplier or the offset is out of range.
            PMPlusValidationError: If the number of multipliers is not m.
        """
        if len(self.a) != params.m:
            raise PMPlusValidationError(
                f"level {level}: expected {params.m} multipliers, got {len(self.a)}"
            )
        max_key = params.max_key
        for index, value in enumerate(self.a):
            if not 1 <= value <= max_key:
                raise KeyOutOfRangeError(
                    f"level {level}: multiplier {index} outside [1, p - kappa - 1]",
                    level=level,
                    index=index,
                )
        if not 0 <= self.b <= params.mask:
            raise KeyOutOfRangeError(
                f"level {level}: offset outside [0, 2^{params.n})", level=level, index=None
            )


class KeySchedule(BaseModel):
    """The L levels of keys that identify one PM+ hash function.

    ``levels[0]`` keys f_1, applied at the bottom of the tree.
    """

    params: WideParams
    levels: tuple[BlockKeys, ...]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_levels(self) -> KeySchedule:
        if not self.levels:
            raise PMPlusValidationError("a key schedule needs at least one level")
        if self.is_production and len(self.levels) != PRODUCTION_LEVELS:
            raise PMPlusValidationError(
                f"{self.params.n}-bit schedules have {PRODUCTION_LEVELS} levels, "
                f"got {len(self.levels)}"
            )
        for level, keys in enumerate(self.levels):
            keys.check(self.params, level)
        return self

    @property
    def word_size(self) -> int:
        """Word width in bits."""
        return self.params.n

    @property
    def depth(self) -> int:
        """Number of levels L."""
        return len(self.levels)

    @property
    def is_production(self) -> bool:
        """True for the 32- and 64-bit PM+ parameter sets."""
        return PRODUCTION_PARAMS.get(self.params.n) == self.params

    @property
    def max_words(self) -> int:
        """Longest input in words, m^L - 1."""
        return self.params.m**self.depth - 1

    def __repr__(self) -> str:
        return f"KeySchedule(word_size={self.word_size}, levels={self.depth})"

    __str__ = __repr__
