"""Named test suites run by ``pmplus test``."""

from __future__ import annotations

import logging
from typing import Callable, NamedTuple, Optional

from pmplus.config import SuiteConfig
from pmplus.keys.keygen import generate_schedule
from pmplus.models.keys import KeySchedule
from pmplus.models.reports import TabularReport, Verdict
from pmplus.oracle.properties import regularity_sweep, universality_sweep
from pmplus.quality.avalanche import avalanche_test
from pmplus.quality.collisions import collision_monte_carlo
from pmplus.quality.equivalence import (
    golden_check,
    golden_schedule,
    production_tree_equivalence,
    toy_tree_equivalence,
)
from pmplus.quality.image_fraction import image_fraction_report
from pmplus.quality.mixing import mix_roundtrip
from pmplus.quality.reduction import exhaustive_toy_reduction, reduction_fuzz

logger = logging.getLogger(__name__)

WORD_SIZES = (32, 64)

# Largest n checked against a Python set of all products.
NH_BRUTE_FORCE_BITS = 8


class SuiteOptions(NamedTuple):
    seed: int
    config: SuiteConfig
    exhaustive: bool = False
    schedules: Optional[dict[int, KeySchedule]] = None


class SuiteResult(NamedTuple):
    passed: bool
    sections: list[str]
    tables: list[TabularReport]


def _schedule(options: SuiteOptions, bits: int) -> KeySchedule:
    if options.schedules and bits in options.schedules:
        return options.schedules[bits]
    return generate_schedule(bits, seed=options.seed)


def _verdicts(verdicts: list[Verdict]) -> SuiteResult:
    return SuiteResult(
        passed=all(v.passed for v in verdicts),
        sections=[v.to_text() for v in verdicts],
        tables=[],
    )


def run_reduction(options: SuiteOptions) -> SuiteResult:
    cfg = options.config
    verdicts = [
        reduction_fuzz(bits, cfg.reduction_iterations, options.seed, cfg.shards, cfg.workers)
        for bits in WORD_SIZES
    ]
    verdicts.append(exhaustive_toy_reduction())
    return _verdicts(verdicts)


def run_regularity(options: SuiteOptions) -> SuiteResult:
    return _verdicts([regularity_sweep(options.seed, options.config.regularity_draws)])


def run_universality(options: SuiteOptions) -> SuiteResult:
    return _verdicts([universality_sweep(options.seed, options.config.universality_triples)])


def run_avalanche(options: SuiteOptions) -> SuiteResult:
    cfg = options.config
    sections = []
    tables: list[TabularReport] = []
    passed = True
    for bits in WORD_SIZES:
        reports = avalanche_test(
            _schedule(options, bits),
            cfg.avalanche_lengths,
            cfg.avalanche_trials,
            options.seed,
            cfg.shards,
            cfg.workers,
        )
        for report in reports:
            ok = report.worst_bias < cfg.avalanche_threshold
            passed = passed and ok
            sections.append(
                f"{report.to_text()}\nthreshold={cfg.avalanche_threshold}\n"
                f"result={'pass' if ok else 'fail'}"
            )
            tables.append(report)
    return SuiteResult(passed=passed, sections=sections, tables=tables)


def run_mix(options: SuiteOptions) -> SuiteResult:
    iterations = options.config.mix_iterations
    verdicts = [mix_roundtrip(bits, iterations, options.seed) for bits in WORD_SIZES]
    if options.exhaustive:
        verdicts.append(mix_roundtrip(32, 0, options.seed, exhaustive=True))
    return _verdicts(verdicts)


def run_tree_equivalence(options: SuiteOptions) -> SuiteResult:
    verdicts = [toy_tree_equivalence(options.seed)]
    verdicts.extend(
        production_tree_equivalence(_schedule(options, bits), options.seed) for bits in WORD_SIZES
    )
    return _verdicts(verdicts)


def brute_force_products(n: int) -> int:
    """Distinct products by enumeration into a Python set."""
    size = 1 << n
    return len({x * y for x in range(size) for y in range(size)})


def run_nh_fraction(options: SuiteOptions) -> SuiteResult:
    cfg = options.config
    report = image_fraction_report(cfg.nh_max_bits, cfg.nh_bits_cap)
    problems = []
    if not report.strictly_decreasing:
        problems.append("fractions are not strictly decreasing")
    for point in report.points:
        if point.n <= NH_BRUTE_FORCE_BITS and point.distinct_products != brute_force_products(
            point.n
        ):
            problems.append(f"n={point.n} disagrees with enumeration")
        if point.n >= 3 and point.fraction >= 0.5:
            problems.append(f"n={point.n} fraction not below 0.5")
    lines = [report.to_text()] + [f"problem={p}" for p in problems]
    lines.append(f"result={'fail' if problems else 'pass'}")
    return SuiteResult(passed=not problems, sections=["\n".join(lines)], tables=[report])


def run_collision(options: SuiteOptions) -> SuiteResult:
    cfg = options.config
    report = collision_monte_carlo(
        64,
        cfg.collision_schedules,
        options.seed,
        ceiling=cfg.collision_ceiling,
        shards=cfg.shards,
        workers=cfg.workers,
    )
    return SuiteResult(passed=report.passed, sections=[report.to_text()], tables=[])


def run_golden(options: SuiteOptions) -> SuiteResult:
    sections = []
    passed = True
    for bits in WORD_SIZES:
        if options.schedules and bits in options.schedules:
            schedule = options.schedules[bits]
        else:
            schedule = golden_schedule(bits)
        verdict, digests = golden_check(schedule)
        passed = passed and verdict.passed
        lines = [verdict.to_text()] + [f"{digest}  {name}" for name, digest in digests]
        sections.append("\n".join(lines))
    return SuiteResult(passed=passed, sections=sections, tables=[])


SUITES: dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "reduction": run_reduction,
    "regularity": run_regularity,
    "universality": run_universality,
    "avalanche": run_avalanche,
    "mix": run_mix,
    "tree-equivalence": run_tree_equivalence,
    "nh-fraction": run_nh_fraction,
    "collision": run_collision,
    "golden": run_golden,
}


def run_suite(name: str, options: SuiteOptions) -> SuiteResult:
    """Run one named suite.

    Raises:
        KeyError: If the suite name is unknown.
    """
    logger.debug("running suite %s with seed %d", name, options.seed)
    return SUITES[name](options)
