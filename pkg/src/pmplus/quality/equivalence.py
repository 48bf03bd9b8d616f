"""Cross-checks between the word-level hasher and the reference.

The streaming tree is compared with the level-by-level reference on toy
and production parameters, update splits are compared with one-shot
hashing, and a fixed vector set gives the golden digests.
"""

from __future__ import annotations

import logging
import random
from importlib import resources
from typing import Callable, Optional

from pmplus.arith.params import WideParams
from pmplus.arith.wide import field_value
from pmplus.exceptions import LengthExceededError
from pmplus.hashing.hasher import PMPlusHasher, format_digest, hash_oneshot
from pmplus.hashing.mix import mix
from pmplus.hashing.tree import TreeAccumulator
from pmplus.keys.keyfile import fingerprint, load, save
from pmplus.keys.keygen import generate_keys
from pmplus.models.keys import KeySchedule
from pmplus.models.reports import Verdict
from pmplus.oracle.toy import ToyKeys, ToyParams, oracle_digest_value, oracle_tree

logger = logging.getLogger(__name__)

# p = 17, m = 2: the smallest field with admissible keys and a two-word product.
TOY_TREE_PARAMS = WideParams(n=4, k=1, kappa=2, m=2)


def toy_params_for(params: WideParams, levels: int) -> ToyParams:
    """The reference configuration matching a word-level parameter set."""
    return ToyParams(n=params.n, k=params.k, kappa=params.kappa, m=params.m, levels=levels)


def toy_keys_for(schedule: KeySchedule) -> list[ToyKeys]:
    return [ToyKeys(a=tuple(level.a), b=level.b) for level in schedule.levels]


def tree_result(schedule: KeySchedule, words: list[int]) -> int:
    """Streaming tree value of ``words`` followed by the marker 1."""
    tree = TreeAccumulator(schedule)
    tree.push_words(words)
    tree.push(1)
    return field_value(tree.finish(), schedule.params)


class _Tally:
    def __init__(self) -> None:
        self.checked = 0
        self.failures = 0
        self.first: Optional[str] = None

    def record(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            self.first = self.first or what


def _compare_lengths(
    schedule: KeySchedule, lengths: list[int], rng: random.Random, tally: _Tally
) -> None:
    toy = toy_params_for(schedule.params, schedule.depth)
    keys = toy_keys_for(schedule)
    n = schedule.params.n
    for length in lengths:
        words = [rng.getrandbits(n) for _ in range(length)]
        got = tree_result(schedule, words)
        expected = oracle_tree(toy, keys, words)
        tally.record(got == expected, f"length={length} got={got} expected={expected}")


def toy_tree_equivalence(seed: int, max_length: int = 30, levels: int = 5) -> Verdict:
    """Streaming tree versus reference for every length 0..max_length at p = 17.

    Also checks that with three levels both sides reject strings longer
    than m^L - 1.
    """
    rng = random.Random(seed)
    tally = _Tally()
    schedule = generate_keys(TOY_TREE_PARAMS, levels, seed=rng.getrandbits(64))
    _compare_lengths(schedule, list(range(max_length + 1)), rng, tally)

    short = generate_keys(TOY_TREE_PARAMS, 3, seed=rng.getrandbits(64))
    short_toy = toy_params_for(TOY_TREE_PARAMS, 3)
    too_long = [rng.getrandbits(TOY_TREE_PARAMS.n) for _ in range(short.max_words + 1)]
    tally.record(_rejects(lambda: tree_result(short, too_long)), "streaming accepted m^L words")
    tally.record(
        _rejects(lambda: oracle_tree(short_toy, toy_keys_for(short), too_long)),
        "reference accepted m^L words",
    )
    return Verdict(
        suite="tree-equivalence-toy",
        passed=tally.failures == 0,
        checked=tally.checked,
        failures=tally.failures,
        seed=seed,
        parameters={"p": "17", "m": "2", "levels": str(levels), "max_length": str(max_length)},
        first_failure=tally.first,
    )


def _rejects(call: Callable[[], object]) -> bool:
    try:
        call()
    except LengthExceededError:
        return True
    return False


def production_tree_equivalence(
    schedule: KeySchedule,
    seed: int,
    max_words: Optional[int] = None,
    split_bytes: int = 1024,
    boundary_lengths: bool = True,
) -> Verdict:
    """Streaming versus reference on production parameters.

    Compares every word length 0..max_words (default 3m + 5), optionally
    the lengths around m^2, then every update split of one random input
    of ``split_bytes`` bytes against one-shot hashing and the reference.
    """
    m = schedule.params.m
    max_words = 3 * m + 5 if max_words is None else max_words
    rng = random.Random(seed)
    tally = _Tally()

    lengths = list(range(max_words + 1))
    if boundary_lengths:
        lengths += [m * m - 1, m * m, m * m + 1]
    _compare_lengths(schedule, lengths, rng, tally)

    data = rng.randbytes(split_bytes)
    whole = hash_oneshot(schedule, data)
    toy = toy_params_for(schedule.params, schedule.depth)
    expected = mix(oracle_digest_value(toy, toy_keys_for(schedule), data), schedule.word_size)
    tally.record(whole == expected, f"one-shot {whole:#x} != reference {expected:#x}")
    for cut in range(split_bytes + 1):
        hasher = PMPlusHasher(schedule)
        hasher.update(data[:cut])
        hasher.update(data[cut:])
        digest = hasher.finalize()
        tally.record(digest == whole, f"split at {cut} gave {digest:#x}")
    logger.debug("tree equivalence: %d checks, %d failures", tally.checked, tally.failures)

    return Verdict(
        suite="tree-equivalence",
        passed=tally.failures == 0,
        checked=tally.checked,
        failures=tally.failures,
        seed=seed,
        parameters={
            "bits": str(schedule.word_size),
            "max_words": str(max_words),
            "split_bytes": str(split_bytes),
        },
        first_failure=tally.first,
    )


def golden_vectors() -> list[tuple[str, bytes]]:
    """Fixed inputs for golden digests."""
    return [
        ("empty", b""),
        ("a", b"a"),
        ("abc", b"abc"),
        ("8-bytes", b"abcdefgh"),
        ("1024-bytes", bytes(i & 0xFF for i in range(1024))),
        ("256k-random", random.Random(0).randbytes(256 * 1024)),
    ]


GOLDEN_KEY_FILES = {32: "golden_key_32.pmph", 64: "golden_key_64.pmph"}

# Digests of golden_vectors() under the checked-in key files, by key fingerprint.
FROZEN_DIGESTS: dict[str, dict[str, str]] = {
    "7821d9b2ef24611c": {
        "empty": "ab3b4e74",
        "a": "1d972c78",
        "abc": "28258683",
        "8-bytes": "b7ee5120",
        "1024-bytes": "7dd12cd4",
        "256k-random": "ebb36752",
    },
    "7abeee0202d04b30": {
        "empty": "c4ceb9fe78e2b0ac",
        "a": "610e7762a22de5c2",
        "abc": "a0e68726583c12e0",
        "8-bytes": "796e7945330f0d13",
        "1024-bytes": "41b288d8dabd30ec",
        "256k-random": "000f3b28842253f8",
    },
}


def golden_key_bytes(bits: int) -> bytes:
    """Contents of the checked-in key file for ``bits``."""
    return (resources.files("pmplus") / "data" / GOLDEN_KEY_FILES[bits]).read_bytes()


def golden_schedule(bits: int) -> KeySchedule:
    return load(golden_key_bytes(bits))


def frozen_digests(schedule: KeySchedule) -> Optional[dict[str, str]]:
    """Frozen golden digests for ``schedule``, or None if its keys are not checked in."""
    if not schedule.is_production:
        return None
    return FROZEN_DIGESTS.get(fingerprint(save(schedule)))


def golden_check(schedule: KeySchedule) -> tuple[Verdict, list[tuple[str, str]]]:
    """Digest every golden vector on both paths.

    The word-level digest must match the reference, and the frozen value
    too when the schedule comes from a checked-in key file.

    Returns:
        The verdict and (name, hex digest) pairs from the word-level path.
    """
    frozen = frozen_digests(schedule)
    toy = toy_params_for(schedule.params, schedule.depth)
    keys = toy_keys_for(schedule)
    bits = schedule.word_size
    tally = _Tally()
    digests = []
    for name, data in golden_vectors():
        digest = hash_oneshot(schedule, data)
        expected = mix(oracle_digest_value(toy, keys, data), bits)
        tally.record(digest == expected, f"{name}: {digest:#x} != reference {expected:#x}")
        hexdigest = format_digest(digest, bits)
        if frozen is not None:
            tally.record(hexdigest == frozen[name], f"{name}: {hexdigest} != frozen {frozen[name]}")
        digests.append((name, hexdigest))
    verdict = Verdict(
        suite="golden",
        passed=tally.failures == 0,
        checked=tally.checked,
        failures=tally.failures,
        parameters={"bits": str(bits), "frozen": "yes" if frozen is not None else "no"},
        first_failure=tally.first,
    )
    return verdict, digests
