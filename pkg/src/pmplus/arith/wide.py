"""Exact fixed-width arithmetic modulo p = 2^n + k.

Values are Python integers confined to n-bit words. Products are split
into (lo, hi) word pairs, sums of up to m products live in a three-word
accumulator, and reduction modulo p uses 2^n = -k and 2^(2n) = k^2 so
that no division is ever needed.

Preconditions are checked with ``assert``; they follow from the key
ranges and the block width, not from the data, and are skipped under
``python -O``.
"""

from __future__ import annotations

from typing import NamedTuple

from pmplus.arith.params import WideParams


class FieldElement(NamedTuple):
    """An integer in [0, p) stored as a low word plus a 0/1 high part.

    When ``hi`` is 1 the value is 2^n + lo with lo < k.
    """

    lo: int
    hi: int = 0


def field_value(elem: FieldElement, params: WideParams) -> int:
    """Integer value of ``elem`` for the given word width."""
    return elem.lo + (elem.hi << params.n)


def lift(value: int, params: WideParams) -> FieldElement:
    """Embed an integer in [0, p) as a FieldElement."""
    assert 0 <= value < params.p, "value outside [0, p)"
    return FieldElement(value & params.mask, value >> params.n)


def is_canonical(elem: FieldElement, params: WideParams) -> bool:
    """True when ``elem`` satisfies the FieldElement range invariant."""
    if not 0 <= elem.lo <= params.mask:
        return False
    if elem.hi == 0:
        return True
    return elem.hi == 1 and elem.lo < params.k


class TripleAccumulator(NamedTuple):
    """S = w0 + w1 * 2^n + w2 * 2^(2n) with n-bit words."""

    w0: int = 0
    w1: int = 0
    w2: int = 0

    def total(self, n: int) -> int:
        return self.w0 + (self.w1 << n) + (self.w2 << (2 * n))


def accumulator_from_int(value: int, params: WideParams) -> TripleAccumulator:
    """Split a non-negative integer below 2^(3n) into three words."""
    mask = params.mask
    n = params.n
    assert 0 <= value < 1 << (3 * n), "value does not fit three words"
    return TripleAccumulator(value & mask, (value >> n) & mask, value >> (2 * n))


def mul_wide(a: int, b: int, n: int) -> tuple[int, int]:
    """Exact product of two n-bit words as (lo, hi)."""
    product = a * b
    return product & ((1 << n) - 1), product >> n


def mul_field(a: int, s: FieldElement, params: WideParams) -> tuple[int, int]:
    """Exact product of a key word and a field element as (lo, hi).

    The key range guarantees the product fits two words.
    """
    assert 1 <= a <= params.max_key, "multiplier outside [1, p - kappa - 1]"
    assert is_canonical(s, params), "operand is not a reduced field element"
    lo, hi = mul_wide(a, s.lo, params.n)
    if s.hi:
        hi += a
    assert hi <= params.mask, "product overflows two words"
    return lo, hi


def acc3_add(acc: TripleAccumulator, prod: tuple[int, int], n: int) -> TripleAccumulator:
    """Add a two-word value to the accumulator with carry propagation."""
    mask = (1 << n) - 1
    lo, hi = prod
    w0 = acc.w0 + lo
    carry = w0 >> n
    w1 = acc.w1 + hi + carry
    carry = w1 >> n
    return TripleAccumulator(w0 & mask, w1 & mask, acc.w2 + carry)


def reduce3_to_2(acc: TripleAccumulator, params: WideParams) -> tuple[int, int]:
    """Fold three words into a congruent (v0, v1) with v1 <= 2.

    S = w0 + w1 * 2^n + w2 * 2^(2n)
      = (w0 + k^2 * w2 + k * u1) + (2^n + k - u0)  (mod p)
    where k * w1 = u1 * 2^n + u0. The result is not canonical.
    """
    n = params.n
    k = params.k
    assert acc.w2 <= params.m, "accumulator holds more than m products"
    u0, u1 = mul_wide(k, acc.w1, n)
    t = (acc.w0 + k * k * acc.w2 + k * u1) + ((1 << n) + k - u0)
    v0 = t & params.mask
    v1 = t >> n
    assert v1 <= 2, "reduction bound violated"
    return v0, v1


def reduce2_final(v0: int, v1: int, params: WideParams) -> FieldElement:
    """Canonical residue z in [0, p) of v0 + v1 * 2^n, branching as the
    reduction algorithm does."""
    assert v1 in (0, 1, 2), "v1 must be 0, 1 or 2"
    k = params.k
    if v0 >= 2 * k or k * v1 <= v0:
        return FieldElement(v0 - k * v1, 0)
    if v1 == 1:
        # v0 < k here, so v0 + 2^n < p
        return FieldElement(v0, 1)
    # v1 == 2 and v0 < 2k: v0 + 2 * 2^n = v0 + 2^n - k (mod p)
    z = v0 + (1 << params.n) - k
    return FieldElement(z & params.mask, z >> params.n)


def mod_p(acc: TripleAccumulator, params: WideParams) -> FieldElement:
    """Canonical residue of the accumulator modulo p."""
    v0, v1 = reduce3_to_2(acc, params)
    return reduce2_final(v0, v1, params)
