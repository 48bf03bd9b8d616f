"""``pmplus`` command line.

Exit codes: 0 success, 1 property failure, 2 I/O error, 3 key file
rejected, 64 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import BinaryIO, NoReturn, Optional, TextIO

from pmplus import __version__
from pmplus.cli.bench import BENCH_LENGTHS, run_bench
from pmplus.cli.suites import SUITES, SuiteOptions, run_suite
from pmplus.config import SEED_ENV_VAR, SuiteConfig, resolve_seed
from pmplus.exceptions import KeyFileError, PMPlusError
from pmplus.hashing.hasher import PMPlusHasher, format_digest
from pmplus.keys.keyfile import fingerprint, read_keyfile, save
from pmplus.keys.keygen import generate_schedule
from pmplus.models.keys import KeySchedule

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_IO = 2
EXIT_KEY = 3
EXIT_USAGE = 64

# SuiteConfig fields replaced by --iterations.
ITERATION_FIELDS = (
    "reduction_iterations",
    "avalanche_trials",
    "collision_schedules",
    "mix_iterations",
)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage code instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pmplus", description="PM+ almost-universal hashing")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    keygen = sub.add_parser("keygen", help="generate a key file")
    keygen.add_argument("--bits", type=int, choices=(32, 64), required=True)
    keygen.add_argument("--seed", type=_seed, help=f"u64 seed (falls back to {SEED_ENV_VAR})")
    keygen.add_argument("--out", type=Path, required=True, help="key file to write")

    hash_ = sub.add_parser("hash", help="hash files or stdin")
    hash_.add_argument("--key", type=Path, required=True, help="key file")
    hash_.add_argument("files", nargs="*", default=["-"], help="inputs; '-' is stdin")

    test = sub.add_parser("test", help="run a quality suite")
    test.add_argument("suite", choices=sorted(SUITES))
    test.add_argument("--seed", type=_seed, help=f"u64 seed (falls back to {SEED_ENV_VAR})")
    test.add_argument("--key", type=Path, action="append", default=[], help="use this key file")
    test.add_argument(
        "--workers", type=_positive, help="worker processes (default: CPU count)"
    )
    test.add_argument("--iterations", type=_positive, help="override the sample count")
    test.add_argument("--exhaustive", action="store_true", help="long-running exhaustive mode")
    test.add_argument("--csv", type=Path, help="write tabular results to this CSV file")

    bench = sub.add_parser("bench", help="throughput over 64 B .. 256 kB")
    bench.add_argument("--bits", type=int, choices=(32, 64), required=True)
    bench.add_argument("--key", type=Path, help="key file (default: schedule from --seed)")
    bench.add_argument("--seed", type=_seed)
    bench.add_argument(
        "--repetitions", type=_positive, help="timed repetitions per length (at least 9)"
    )
    return parser


def _seed(raw: str) -> int:
    try:
        value = int(raw, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _load_key(path: Path, err: TextIO) -> Optional[KeySchedule]:
    try:
        return read_keyfile(path)
    except KeyFileError as e:
        err.write(f"pmplus: {path}: rejected key file: {e}\n")
        return None


def cmd_keygen(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    seed = args.seed
    if seed is None:
        seed = _env_seed()
    schedule = generate_schedule(args.bits, seed=seed)
    data = save(schedule)
    try:
        args.out.write_bytes(data)
    except OSError as e:
        err.write(f"pmplus: cannot write {args.out}: {e.strerror}\n")
        return EXIT_IO
    err.write(f"seed={'entropy' if seed is None else seed}\n")
    err.write(f"wrote {len(data)} bytes to {args.out} fingerprint={fingerprint(data)}\n")
    return EXIT_OK


def _env_seed() -> Optional[int]:
    if os.environ.get(SEED_ENV_VAR):
        return resolve_seed()
    return None


def _hash_stream(schedule: KeySchedule, stream: BinaryIO, chunk_size: int) -> str:
    hasher = PMPlusHasher(schedule)
    while True:
        chunk = stream.read(chunk_size)
        if not chunk:
            break
        hasher.update(chunk)
    return format_digest(hasher.finalize(), schedule.word_size)


def cmd_hash(
    args: argparse.Namespace, out: TextIO, err: TextIO, stdin: Optional[BinaryIO] = None
) -> int:
    try:
        schedule = _load_key(args.key, err)
    except OSError as e:
        err.write(f"pmplus: cannot read key {args.key}: {e.strerror}\n")
        return EXIT_IO
    if schedule is None:
        return EXIT_KEY

    chunk_size = SuiteConfig().stdin_chunk_size
    status = EXIT_OK
    for name in args.files:
        try:
            if name == "-":
                digest = _hash_stream(schedule, stdin or sys.stdin.buffer, chunk_size)
            else:
                with open(name, "rb") as f:
                    digest = _hash_stream(schedule, f, chunk_size)
        except OSError as e:
            err.write(f"pmplus: {name}: {e.strerror}\n")
            status = EXIT_IO
            continue
        except PMPlusError as e:
            err.write(f"pmplus: {name}: {e}\n")
            status = EXIT_IO
            continue
        out.write(f"{digest}  {name}\n")
    return status


def cmd_test(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    seed = resolve_seed(args.seed)
    sizes: dict[str, int] = {}
    if args.iterations is not None:
        sizes = {name: args.iterations for name in ITERATION_FIELDS}
    if args.workers is not None:
        sizes["workers"] = args.workers
    config = SuiteConfig(seed=seed, **sizes)
    schedules = {}
    for path in args.key:
        try:
            schedule = _load_key(path, err)
        except OSError as e:
            err.write(f"pmplus: cannot read key {path}: {e.strerror}\n")
            return EXIT_IO
        if schedule is None:
            return EXIT_KEY
        schedules[schedule.word_size] = schedule

    err.write(f"seed={seed}\n")
    options = SuiteOptions(
        seed=seed, config=config, exhaustive=args.exhaustive, schedules=schedules
    )
    result = run_suite(args.suite, options)
    out.write("\n\n".join(result.sections) + "\n")
    if args.csv is not None and result.tables:
        try:
            args.csv.write_text("".join(t.to_csv() for t in result.tables))
        except OSError as e:
            err.write(f"pmplus: cannot write {args.csv}: {e.strerror}\n")
            return EXIT_IO
    out.write(f"suite={args.suite} result={'pass' if result.passed else 'fail'}\n")
    return EXIT_OK if result.passed else EXIT_FAILURE


def cmd_bench(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.key is not None:
        try:
            schedule = _load_key(args.key, err)
        except OSError as e:
            err.write(f"pmplus: cannot read key {args.key}: {e.strerror}\n")
            return EXIT_IO
        if schedule is None:
            return EXIT_KEY
        if schedule.word_size != args.bits:
            err.write(f"pmplus: {args.key} holds a {schedule.word_size}-bit schedule\n")
            return EXIT_KEY
    else:
        seed = resolve_seed(args.seed)
        err.write(f"seed={seed}\n")
        schedule = generate_schedule(args.bits, seed=seed)
    repetitions = args.repetitions or SuiteConfig().bench_repetitions
    report = run_bench(schedule, BENCH_LENGTHS, repetitions)
    out.write(report.to_csv())
    return EXIT_OK


def main(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
    stdin: Optional[BinaryIO] = None,
) -> int:
    """Run the command line and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    _configure_logging(args.verbose)

    try:
        if args.command == "keygen":
            return cmd_keygen(args, out, err)
        if args.command == "hash":
            return cmd_hash(args, out, err, stdin)
        if args.command == "test":
            return cmd_test(args, out, err)
        return cmd_bench(args, out, err)
    except PMPlusError as e:
        err.write(f"pmplus: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
