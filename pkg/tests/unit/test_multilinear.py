"""Unit tests for the PM+-Multilinear block hash."""

from __future__ import annotations

import random

import pytest

from pmplus.arith import PM32, PM64, WideParams, field_value, lift
from pmplus.hashing.multilinear import (
    hash_block_elems,
    hash_block_words,
    hash_partial_elems,
    hash_partial_words,
)
from pmplus.models.keys import BlockKeys
from pmplus.oracle.toy import ToyKeys, ToyParams, oracle_block


def _random_keys(params: WideParams, rng: random.Random) -> BlockKeys:
    a = tuple(rng.randint(1, params.max_key) for _ in range(params.m))
    return BlockKeys(a=a, b=rng.randrange(params.word_modulus))


def _oracle(params: WideParams) -> ToyParams:
    return ToyParams(n=params.n, k=params.k, kappa=params.kappa, m=params.m, levels=1)


PARAMS = pytest.mark.parametrize("params", [PM32, PM64], ids=["pm32", "pm64"])


class TestHashBlockWords:
    """Tests for first-level blocks."""

    @PARAMS
    def test_zero_input(self, params: WideParams) -> None:
        """Test that an all-zero block hashes to b."""
        keys = _random_keys(params, random.Random(1))
        assert field_value(hash_block_words(keys, [0] * params.m, params), params) == keys.b

    def test_unit_keys(self) -> None:
        """Test a sum with every multiplier set to one."""
        keys = BlockKeys(a=(1,) * 128, b=0)
        s = [1, 2] + [0] * 126
        assert field_value(hash_block_words(keys, s, PM64), PM64) == 3

    @PARAMS
    def test_matches_reference(self, params: WideParams) -> None:
        """Test random blocks against big-integer evaluation."""
        rng = random.Random(2)
        oracle = _oracle(params)
        for _ in range(50):
            keys = _random_keys(params, rng)
            s = [rng.getrandbits(params.n) for _ in range(params.m)]
            expected = oracle_block(oracle, ToyKeys(a=keys.a, b=keys.b), s)
            assert field_value(hash_block_words(keys, s, params), params) == expected

    def test_wrong_length(self) -> None:
        """Test that first-level blocks need exactly m words."""
        keys = BlockKeys(a=(1,) * 128, b=0)
        with pytest.raises(AssertionError):
            hash_block_words(keys, [1, 2, 3], PM32)

    @PARAMS
    def test_maximal_words(self, params: WideParams) -> None:
        """Test the largest keys against all-ones input."""
        keys = BlockKeys(a=(params.max_key,) * params.m, b=params.mask)
        s = [params.mask] * params.m
        expected = (params.mask + params.m * params.max_key * params.mask) % params.p
        assert field_value(hash_block_words(keys, s, params), params) == expected


class TestHashBlockElems:
    """Tests for upper-level blocks."""

    @PARAMS
    def test_zero_input(self, params: WideParams) -> None:
        """Test that an all-zero block hashes to b."""
        keys = _random_keys(params, random.Random(3))
        zeros = [lift(0, params)] * params.m
        assert field_value(hash_block_elems(keys, zeros, params), params) == keys.b

    @PARAMS
    def test_identity_coefficient(self, params: WideParams) -> None:
        """Test that a single p - 1 with a unit key comes back unchanged."""
        keys = BlockKeys(a=(1,) * params.m, b=0)
        s = [lift(params.p - 1, params)] + [lift(0, params)] * (params.m - 1)
        assert field_value(hash_block_elems(keys, s, params), params) == params.p - 1

    @PARAMS
    def test_matches_reference(self, params: WideParams) -> None:
        """Test random field-element blocks against big-integer evaluation."""
        rng = random.Random(4)
        oracle = _oracle(params)
        for _ in range(50):
            keys = _random_keys(params, rng)
            values = [rng.randrange(params.p) for _ in range(params.m)]
            # Force some inputs into [2^n, p)
            values[0] = params.p - 1
            values[1] = params.word_modulus
            s = [lift(v, params) for v in values]
            expected = oracle_block(oracle, ToyKeys(a=keys.a, b=keys.b), values)
            assert field_value(hash_block_elems(keys, s, params), params) == expected

    @PARAMS
    def test_consistent_with_words(self, params: WideParams) -> None:
        """Test that lifting words gives the same value on both paths."""
        rng = random.Random(5)
        keys = _random_keys(params, rng)
        s = [rng.getrandbits(params.n) for _ in range(params.m)]
        lifted = [lift(w, params) for w in s]
        assert hash_block_words(keys, s, params) == hash_block_elems(keys, lifted, params)

    def test_linearity(self) -> None:
        """Test that changing one component shifts the output by a_i * delta."""
        rng = random.Random(6)
        params = PM64
        keys = _random_keys(params, rng)
        s = [rng.randrange(params.p) for _ in range(params.m)]
        i = rng.randrange(params.m)
        changed = list(s)
        changed[i] = rng.randrange(params.p)
        before = field_value(hash_block_elems(keys, [lift(v, params) for v in s], params), params)
        after = field_value(
            hash_block_elems(keys, [lift(v, params) for v in changed], params), params
        )
        assert (after - before) % params.p == keys.a[i] * (changed[i] - s[i]) % params.p


class TestPartialBlocks:
    """Tests for zero-extended partial blocks."""

    def test_words_zero_extend(self) -> None:
        """Test that a short block equals its zero-padded form."""
        rng = random.Random(7)
        keys = _random_keys(PM32, rng)
        s = [rng.getrandbits(32) for _ in range(10)]
        padded = s + [0] * (PM32.m - 10)
        assert hash_partial_words(keys, s, PM32) == hash_block_words(keys, padded, PM32)

    def test_elems_zero_extend(self) -> None:
        """Test zero extension for field elements."""
        rng = random.Random(8)
        keys = _random_keys(PM64, rng)
        s = [lift(rng.randrange(PM64.p), PM64) for _ in range(3)]
        padded = s + [lift(0, PM64)] * (PM64.m - 3)
        assert hash_partial_elems(keys, s, PM64) == hash_block_elems(keys, padded, PM64)

    def test_empty_is_offset(self) -> None:
        """Test that an empty partial block hashes to b."""
        keys = _random_keys(PM32, random.Random(9))
        assert field_value(hash_partial_words(keys, [], PM32), PM32) == keys.b
