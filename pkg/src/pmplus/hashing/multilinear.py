"""PM+-Multilinear block hash: f(s) = (b + sum a_i * s_i) mod p.

Two flavors: first-level inputs are plain n-bit words, upper-level inputs
are field elements in [0, p). The partial variants take fewer than m
inputs and treat the missing ones as zeros, which is how the tree hashes
its last block without materialising the padding.
"""

from __future__ import annotations

from collections.abc import Sequence

from pmplus.arith.params import WideParams
from pmplus.arith.wide import (
    FieldElement,
    TripleAccumulator,
    acc3_add,
    mod_p,
    mul_field,
    mul_wide,
)
from pmplus.models.keys import BlockKeys


def hash_partial_words(keys: BlockKeys, s: Sequence[int], params: WideParams) -> FieldElement:
    """Block hash over at most m words, zero-extended to m."""
    assert len(s) <= params.m, "block longer than m"
    n = params.n
    acc = TripleAccumulator(keys.b, 0, 0)
    for a, word in zip(keys.a, s):
        acc = acc3_add(acc, mul_wide(a, word, n), n)
    return mod_p(acc, params)


def hash_partial_elems(
    keys: BlockKeys, s: Sequence[FieldElement], params: WideParams
) -> FieldElement:
    """Block hash over at most m field elements, zero-extended to m."""
    assert len(s) <= params.m, "block longer than m"
    n = params.n
    acc = TripleAccumulator(keys.b, 0, 0)
    for a, elem in zip(keys.a, s):
        acc = acc3_add(acc, mul_field(a, elem, params), n)
    return mod_p(acc, params)


def hash_block_words(keys: BlockKeys, s: Sequence[int], params: WideParams) -> FieldElement:
    """First-level block hash over exactly m words."""
    assert len(s) == params.m, "first-level blocks hold exactly m words"
    return hash_partial_words(keys, s, params)


def hash_block_elems(
    keys: BlockKeys, s: Sequence[FieldElement], params: WideParams
) -> FieldElement:
    """Upper-level block hash over exactly m field elements."""
    assert len(s) == params.m, "upper-level blocks hold exactly m elements"
    return hash_partial_elems(keys, s, params)
