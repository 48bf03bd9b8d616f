"""Share of 2n-bit integers that are products of two n-bit integers.

Products are marked in a packed bitset of 2^(2n) bits, so n=14 needs
32 MB.
"""

from __future__ import annotations

import numpy as np

from pmplus.exceptions import OutOfRangeError
from pmplus.models.reports import ImageFractionPoint, ImageFractionReport

NH_BITS_CAP = 14

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def count_products(n: int) -> int:
    """Number of distinct x * y with x, y in [0, 2^n)."""
    size = 1 << n
    bitset = np.zeros(max(1, (1 << (2 * n)) // 8), dtype=np.uint8)
    ys = np.arange(size, dtype=np.uint64)
    for x in range(size):
        # y >= x covers every product by symmetry
        products = ys[x:] * np.uint64(x)
        index = (products >> np.uint64(3)).astype(np.intp)
        mask = np.left_shift(np.uint8(1), (products & np.uint64(7)).astype(np.uint8))
        np.bitwise_or.at(bitset, index, mask)
    return int(_POPCOUNT[bitset].sum(dtype=np.int64))


def nh_image_fraction(n: int, cap: int = NH_BITS_CAP) -> ImageFractionPoint:
    """Exact image fraction for one n.

    Raises:
        OutOfRangeError: If n exceeds ``cap`` or is below 1.
    """
    if not 1 <= n <= cap:
        raise OutOfRangeError(f"n={n} outside [1, {cap}]")
    return ImageFractionPoint(n=n, distinct_products=count_products(n))


def image_fraction_report(max_bits: int, cap: int = NH_BITS_CAP) -> ImageFractionReport:
    """Points for n = 1 .. max_bits."""
    return ImageFractionReport(
        points=tuple(nh_image_fraction(n, cap) for n in range(1, max_bits + 1))
    )
