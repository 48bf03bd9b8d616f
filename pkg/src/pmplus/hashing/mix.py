"""Invertible xorshift-multiply-xorshift finalizers.

The 64-bit variant uses shifts 33/33 and multiplier 0xc4ceb9fe1a85ec53, the
32-bit variant shifts 13/16 and multiplier 0xab3be54f. Both are bijections
on n-bit words, so they leave universality and regularity untouched.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
import numpy.typing as npt


class MixConstants(NamedTuple):
    bits: int
    first_shift: int
    multiplier: int
    second_shift: int

    @property
    def mask(self) -> int:
        return (1 << self.bits) - 1

    @property
    def inverse_multiplier(self) -> int:
        return pow(self.multiplier, -1, 1 << self.bits)


MIX64 = MixConstants(bits=64, first_shift=33, multiplier=0xC4CEB9FE1A85EC53, second_shift=33)
MIX32 = MixConstants(bits=32, first_shift=13, multiplier=0xAB3BE54F, second_shift=16)

_MIXES = {32: MIX32, 64: MIX64}
_INVERSES = {bits: constants.inverse_multiplier for bits, constants in _MIXES.items()}
_DTYPES = {32: np.uint32, 64: np.uint64}


def mix_constants(bits: int) -> MixConstants:
    """Finalizer constants for a 32- or 64-bit digest."""
    try:
        return _MIXES[bits]
    except KeyError:
        raise ValueError(f"no finalizer for {bits}-bit words") from None


def _unxorshift(z: int, shift: int, bits: int) -> int:
    # inverse of z ^= z >> shift
    result = z
    s = shift
    while s < bits:
        result ^= z >> s
        s += shift
    return result


def mix(z: int, bits: int = 64) -> int:
    """Apply the finalizer to an n-bit word."""
    constants = mix_constants(bits)
    z ^= z >> constants.first_shift
    z = (z * constants.multiplier) & constants.mask
    z ^= z >> constants.second_shift
    return z


def unmix(z: int, bits: int = 64) -> int:
    """Exact inverse of :func:`mix`."""
    constants = mix_constants(bits)
    z = _unxorshift(z, constants.second_shift, bits)
    z = (z * _INVERSES[bits]) & constants.mask
    z = _unxorshift(z, constants.first_shift, bits)
    return z


def _array_unxorshift(z: npt.NDArray[np.unsignedinteger], shift: int, bits: int) -> npt.NDArray:
    dtype = z.dtype.type
    result = z.copy()
    s = shift
    while s < bits:
        result ^= z >> dtype(s)
        s += shift
    return result


def mix_array(z: npt.ArrayLike, bits: int = 64) -> npt.NDArray[np.unsignedinteger]:
    """Vectorised :func:`mix`; integer products wrap modulo 2^bits."""
    constants = mix_constants(bits)
    dtype = _DTYPES[bits]
    out = np.array(z, dtype=dtype, copy=True)
    out ^= out >> dtype(constants.first_shift)
    out *= dtype(constants.multiplier)
    out ^= out >> dtype(constants.second_shift)
    return out


def unmix_array(z: npt.ArrayLike, bits: int = 64) -> npt.NDArray[np.unsignedinteger]:
    """Vectorised :func:`unmix`."""
    constants = mix_constants(bits)
    dtype = _DTYPES[bits]
    out = np.array(z, dtype=dtype, copy=True)
    out = _array_unxorshift(out, constants.second_shift, bits)
    out *= dtype(_INVERSES[bits])
    out = _array_unxorshift(out, constants.first_shift, bits)
    return out
