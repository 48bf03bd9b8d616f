"""Differential testing of the modular reduction against big-integer mod p."""

from __future__ import annotations

import logging
import random
from typing import Optional

from pmplus.arith.params import WideParams, params_for_bits
from pmplus.arith.wide import TripleAccumulator, field_value, mod_p
from pmplus.models.reports import Verdict
from pmplus.quality.shards import run_shards, shard_seeds, split_work

logger = logging.getLogger(__name__)

# n=8, k=1 field with room for w2 up to 128.
TOY_REDUCTION_PARAMS = WideParams(n=8, k=1, kappa=2, m=128)


def boundary_accumulators(params: WideParams) -> list[TripleAccumulator]:
    """Edge cases for the reduction: extremes of each word and the
    neighbourhood of the final-branch thresholds."""
    mask, k, m = params.mask, params.k, params.m
    cases = [
        TripleAccumulator(mask, mask, m),
        TripleAccumulator(0, 0, 0),
        TripleAccumulator(0, 1, 0),
        TripleAccumulator(k - 1, 0, 0),
        TripleAccumulator(2 * k - 1, 2, 0),
        TripleAccumulator(mask, mask, 0),
        TripleAccumulator(mask, 0, 0),
        TripleAccumulator(0, mask, 0),
        TripleAccumulator(0, 0, m),
        TripleAccumulator(k, 0, 0),
        TripleAccumulator(2 * k, 0, 0),
        TripleAccumulator(mask - k + 1, 0, 0),
    ]
    cases.extend(TripleAccumulator(v0, v1, 0) for v0 in range(2 * k + 1) for v1 in range(3))
    return cases


def check_accumulator(acc: TripleAccumulator, params: WideParams) -> Optional[str]:
    """Compare mod_p with big-integer arithmetic; describe a mismatch, else None."""
    expected = acc.total(params.n) % params.p
    try:
        got = field_value(mod_p(acc, params), params)
    except AssertionError as e:
        return f"w0={acc.w0:#x} w1={acc.w1:#x} w2={acc.w2} raised {e}"
    if got != expected:
        return f"w0={acc.w0:#x} w1={acc.w1:#x} w2={acc.w2} got={got:#x} expected={expected:#x}"
    return None


def _fuzz_shard(bits: int, iterations: int, seed: int) -> tuple[int, Optional[str]]:
    params = params_for_bits(bits)
    rng = random.Random(seed)
    n, m = params.n, params.m
    failures = 0
    first: Optional[str] = None
    for _ in range(iterations):
        acc = TripleAccumulator(rng.getrandbits(n), rng.getrandbits(n), rng.randint(0, m))
        problem = check_accumulator(acc, params)
        if problem is not None:
            failures += 1
            first = first or problem
    return failures, first


def reduction_fuzz(
    bits: int, iterations: int, seed: int, shards: int = 1, workers: int = 1
) -> Verdict:
    """Boundary battery plus ``iterations`` random accumulators with w2 <= m.

    A mismatch makes the verdict fail and is reported with its operands;
    it never raises.
    """
    params = params_for_bits(bits)
    failures = 0
    first: Optional[str] = None
    battery = boundary_accumulators(params)
    for acc in battery:
        problem = check_accumulator(acc, params)
        if problem is not None:
            failures += 1
            first = first or problem

    sizes = split_work(iterations, shards)
    args = [(bits, size, s) for size, s in zip(sizes, shard_seeds(seed, shards))]
    for shard_failures, shard_first in run_shards(_fuzz_shard, args, workers):
        failures += shard_failures
        first = first or shard_first
    logger.debug("reduction fuzz n=%d: %d cases, %d mismatches", bits, iterations, failures)

    return Verdict(
        suite="reduction",
        passed=failures == 0,
        checked=len(battery) + iterations,
        failures=failures,
        seed=seed,
        parameters={"bits": str(bits), "k": str(params.k), "iterations": str(iterations)},
        first_failure=first,
    )


def exhaustive_toy_reduction(
    max_w2: int = 128, params: WideParams = TOY_REDUCTION_PARAMS
) -> Verdict:
    """Every (w0, w1, w2) with n-bit w0, w1 and w2 <= max_w2 on a small field."""
    if max_w2 > params.m:
        raise ValueError(f"max_w2 must not exceed m={params.m}")
    failures = checked = 0
    first: Optional[str] = None
    words = range(params.word_modulus)
    for w2 in range(max_w2 + 1):
        for w1 in words:
            for w0 in words:
                problem = check_accumulator(TripleAccumulator(w0, w1, w2), params)
                checked += 1
                if problem is not None:
                    failures += 1
                    first = first or problem
    return Verdict(
        suite="reduction-toy",
        passed=failures == 0,
        checked=checked,
        failures=failures,
        parameters={"n": str(params.n), "k": str(params.k), "max_w2": str(max_w2)},
        first_failure=first,
    )
