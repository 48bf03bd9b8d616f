"""Exhaustive and sampled property checks on the reference block hash.

Regularity and almost-delta-universality are checked by brute force over
toy fields; the bounds are kept as exact fractions.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional, Protocol

from pmplus.exceptions import OutOfRangeError, PMPlusValidationError
from pmplus.models.reports import (
    CollisionReport,
    RegularityReport,
    UniformityReport,
    UniversalityReport,
    Verdict,
)
from pmplus.oracle.toy import TOY17, TOY257, ToyKeys, ToyParams, oracle_block, oracle_tree

logger = logging.getLogger(__name__)

# Upper limit on keys enumerated by check_delta_universality.
MAX_ENUMERATED_KEYS = 5_000_000


class FieldShape(Protocol):
    @property
    def p(self) -> int: ...

    @property
    def kappa(self) -> int: ...


def block_universality_bound(params: FieldShape) -> Fraction:
    """1 / (p - 1 - kappa) for one block function."""
    return Fraction(1, params.p - 1 - params.kappa)


def universality_bound(params: FieldShape, levels: int) -> Fraction:
    """3L / (p - 1 - kappa) for the tree followed by mod 2^n."""
    return Fraction(3 * levels, params.p - 1 - params.kappa)


def modulo_bound(params: FieldShape, modulus: int, levels: int = 1) -> Fraction:
    """ceil((2p - 1) / M) * L / (p - 1 - kappa): the bound after reducing mod M."""
    return math.ceil(Fraction(2 * params.p - 1, modulus)) * levels * block_universality_bound(
        params
    )


def random_toy_keys(params: ToyParams, rng: random.Random) -> ToyKeys:
    """Admissible keys for one block: a_i in [1, p - kappa - 1], b in [0, 2^n)."""
    a = tuple(rng.randint(1, params.max_key) for _ in range(params.m))
    return ToyKeys(a=a, b=rng.randrange(1 << params.n))


def random_toy_schedule(params: ToyParams, rng: random.Random) -> list[ToyKeys]:
    return [random_toy_keys(params, rng) for _ in range(params.levels)]


def check_component_regularity(
    params: ToyParams,
    keys: ToyKeys,
    index: int,
    fixed: Sequence[int],
    modulus: Optional[int] = None,
) -> RegularityReport:
    """Sweep component ``index`` over [0, p) with the others held at ``fixed``.

    Without a modulus the check passes iff every output in [0, p) occurs
    exactly once. With a modulus M <= p the outputs are reduced mod M and
    every residue must occur floor(p/M) or ceil(p/M) times.
    """
    m, p = params.m, params.p
    if len(fixed) != m or not 0 <= index < m:
        raise PMPlusValidationError(f"need {m} fixed components and an index below {m}")
    if modulus is not None and not 1 <= modulus <= p:
        raise PMPlusValidationError(f"modulus must lie in [1, {p}]")

    buckets = p if modulus is None else modulus
    histogram = [0] * buckets
    s = list(fixed)
    for value in range(p):
        s[index] = value
        histogram[oracle_block(params, keys, s) % buckets] += 1

    low, high = p // buckets, -(-p // buckets)
    passed = all(low <= count <= high for count in histogram)
    return RegularityReport(
        index=index, modulus=modulus, histogram=tuple(histogram), passed=passed
    )


def check_delta_universality(
    params: ToyParams,
    s: Sequence[int],
    s_prime: Sequence[int],
    c: int,
    modulus: Optional[int] = None,
) -> UniversalityReport:
    """Fraction of all keys for which f(s) - f(s') = c.

    The difference is taken mod p, or mod ``modulus`` after reducing both
    outputs mod ``modulus``. Every (a_1..a_m, b) with a_i in
    [1, p - kappa - 1] and b in [0, 2^n) is enumerated.

    Raises:
        OutOfRangeError: If the key space exceeds MAX_ENUMERATED_KEYS.
    """
    if len(s) != params.m or len(s_prime) != params.m:
        raise PMPlusValidationError(f"inputs must have exactly m={params.m} components")
    total = params.admissible_keys**params.m * (1 << params.n)
    if total > MAX_ENUMERATED_KEYS:
        raise OutOfRangeError(f"{total} keys is too many to enumerate")

    p = params.p
    collisions = 0
    for a in itertools.product(range(1, params.max_key + 1), repeat=params.m):
        for b in range(1 << params.n):
            keys = ToyKeys(a=a, b=b)
            x, y = oracle_block(params, keys, s), oracle_block(params, keys, s_prime)
            if modulus is None:
                hit = (x - y - c) % p == 0
            else:
                hit = (x % modulus - y % modulus - c) % modulus == 0
            collisions += hit

    bound = block_universality_bound(params) if modulus is None else modulo_bound(params, modulus)
    return UniversalityReport(
        collisions=collisions,
        total=total,
        bound_numerator=bound.numerator,
        bound_denominator=bound.denominator,
        modulus=modulus,
    )


def check_uniformity(
    params: ToyParams, a: Sequence[int], s: Sequence[int], target: int
) -> UniformityReport:
    """Count offsets b that make f(s) equal ``target`` for fixed multipliers.

    Exactly one b in [0, p) works; among the 2^n admissible offsets at
    most one does.
    """
    a = tuple(a)
    field = admissible = 0
    for b in range(params.p):
        if oracle_block(params, ToyKeys(a=a, b=b), s) == target:
            field += 1
            admissible += b < 1 << params.n
    return UniformityReport(target=target, field_solutions=field, admissible_solutions=admissible)


def tree_modulo_collision_rate(
    params: ToyParams,
    s: Sequence[int],
    s_prime: Sequence[int],
    modulus: int,
    samples: int,
    seed: int,
) -> CollisionReport:
    """Sampled rate of tree(s) = tree(s') mod M over random schedules.

    The ceiling is the reduced-output bound plus four binomial standard
    deviations.
    """
    rng = random.Random(seed)
    collisions = 0
    for _ in range(samples):
        keys = random_toy_schedule(params, rng)
        x = oracle_tree(params, keys, s)
        y = oracle_tree(params, keys, s_prime)
        collisions += x % modulus == y % modulus
    bound = float(modulo_bound(params, modulus, params.levels))
    ceiling = bound + 4 * math.sqrt(bound * max(0.0, 1 - bound) / samples)
    return CollisionReport(
        schedules=samples, collisions=collisions, ceiling=ceiling, bits=params.n, seed=seed
    )


def regularity_sweep(
    seed: int, draws: int = 50, params: ToyParams = TOY257
) -> Verdict:
    """Random keys and fixed components; each draw sweeps one component,
    once over [0, p) and once reduced mod 2^n."""
    rng = random.Random(seed)
    checked = failures = 0
    first_failure: Optional[str] = None
    for draw in range(draws):
        keys = random_toy_keys(params, rng)
        fixed = [rng.randrange(params.p) for _ in range(params.m)]
        index = rng.randrange(params.m)
        for modulus in (None, 1 << params.n):
            report = check_component_regularity(params, keys, index, fixed, modulus)
            checked += 1
            if not report.passed:
                failures += 1
                if first_failure is None:
                    first_failure = f"draw={draw} index={index} modulus={modulus} fixed={fixed}"
        logger.debug("regularity draw %d done", draw)
    return Verdict(
        suite="regularity",
        passed=failures == 0,
        checked=checked,
        failures=failures,
        seed=seed,
        parameters={"p": str(params.p), "m": str(params.m), "draws": str(draws)},
        first_failure=first_failure,
    )


def universality_sweep(
    seed: int, triples: int = 10, params: ToyParams = TOY17
) -> Verdict:
    """Exhaustive key enumeration for random (s, s', c) triples, with a
    uniformity check for each triple."""
    rng = random.Random(seed)
    checked = failures = 0
    first_failure: Optional[str] = None
    p, m = params.p, params.m
    for _ in range(triples):
        s = [rng.randrange(p) for _ in range(m)]
        s_prime = list(s)
        while s_prime == s:
            s_prime = [rng.randrange(p) for _ in range(m)]
        c = rng.randrange(p)
        report = check_delta_universality(params, s, s_prime, c)
        a = [rng.randint(1, params.max_key) for _ in range(m)]
        uniform = check_uniformity(params, a, s, rng.randrange(p))
        checked += 2
        for ok, label in ((report.passed, "universality"), (uniform.passed, "uniformity")):
            if not ok:
                failures += 1
                if first_failure is None:
                    first_failure = f"{label} s={s} s'={s_prime} c={c}"
        logger.debug("triple done: %d/%d collisions", report.collisions, report.total)
    return Verdict(
        suite="universality",
        passed=failures == 0,
        checked=checked,
        failures=failures,
        seed=seed,
        parameters={
            "p": str(p),
            "kappa": str(params.kappa),
            "m": str(m),
            "triples": str(triples),
            "bound": str(block_universality_bound(params)),
        },
        first_failure=first_failure,
    )
