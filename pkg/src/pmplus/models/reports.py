"""Result models for the quality suites, oracle checks and benchmarks.

Every report renders as key=value lines with ``to_text()``. Reports with
rows also convert to a pyarrow Table, CSV text, and optionally pandas or
Polars frames.
"""

from __future__ import annotations

from abc import abstractmethod
from typing import Any, Optional

import numpy as np
import pyarrow as pa
import pyarrow.csv as pacsv
from pydantic import BaseModel, ConfigDict, Field


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def render_lines(items: dict[str, Any]) -> str:
    """Render ``key=value`` lines, skipping None values."""
    return "\n".join(f"{key}={_format_value(v)}" for key, v in items.items() if v is not None)


class TabularReport(BaseModel):
    """Base for reports that export rows; subclasses supply ``to_arrow()``."""

    @abstractmethod
    def to_arrow(self) -> pa.Table:
        """Rows as a pyarrow Table."""

    def to_csv(self) -> str:
        """Rows as CSV text with a header line."""
        sink = pa.BufferOutputStream()
        pacsv.write_csv(self.to_arrow(), sink)
        return sink.getvalue().to_pybytes().decode("utf-8")  # type: ignore[no-any-return]

    def to_pandas(self) -> Any:
        """Rows as a pandas DataFrame.

        Raises:
            ImportError: If pandas is not installed.
        """
        try:
            import pandas  # noqa: F401
        except ImportError as e:
            raise ImportError(
                "pandas is required for to_pandas(). "
                "Install it with: pip install pmplus-hash[pandas]"
            ) from e
        return self.to_arrow().to_pandas()

    def to_polars(self) -> Any:
        """Rows as a Polars DataFrame.

        Raises:
            ImportError: If polars is not installed.
        """
        try:
            import polars as pl
        except ImportError as e:
            raise ImportError(
                "polars is required for to_polars(). "
                "Install it with: pip install pmplus-hash[polars]"
            ) from e
        return pl.from_arrow(self.to_arrow())


class Verdict(BaseModel):
    """Pass/fail outcome of one suite run.

    Attributes:
        suite: Suite name as used on the command line.
        passed: Whether every check held.
        checked: Number of individual cases evaluated.
        failures: Number of failing cases.
        seed: Seed the run was derived from, if randomized.
        parameters: Sizes and settings the run used.
        first_failure: Operands of the first failing case.
    """

    suite: str
    passed: bool
    checked: int = 0
    failures: int = 0
    seed: Optional[int] = None
    parameters: dict[str, str] = Field(default_factory=dict)
    first_failure: Optional[str] = None

    model_config = {"frozen": True}

    def to_text(self) -> str:
        items: dict[str, Any] = {
            "suite": self.suite,
            "seed": self.seed,
            **self.parameters,
            "checked": self.checked,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "result": "pass" if self.passed else "fail",
        }
        return render_lines(items)


class RegularityReport(BaseModel):
    """Outcome of sweeping one block component over [0, p).

    ``histogram[y]`` counts inputs mapping to y, after reduction mod
    ``modulus`` when one is given.
    """

    index: int
    modulus: Optional[int] = None
    histogram: tuple[int, ...]
    passed: bool

    model_config = {"frozen": True}

    @property
    def total(self) -> int:
        return sum(self.histogram)

    @property
    def max_count(self) -> int:
        return max(self.histogram)

    @property
    def min_count(self) -> int:
        return min(self.histogram)

    def to_text(self) -> str:
        return render_lines(
            {
                "index": self.index,
                "modulus": self.modulus,
                "total": self.total,
                "min_count": self.min_count,
                "max_count": self.max_count,
                "result": "pass" if self.passed else "fail",
            }
        )


class UniversalityReport(BaseModel):
    """Exhaustive count of keys with f(s) - f(s') = c.

    The bound is kept as an exact fraction so the comparison is exact.
    """

    collisions: int
    total: int
    bound_numerator: int
    bound_denominator: int
    modulus: Optional[int] = None

    model_config = {"frozen": True}

    @property
    def probability(self) -> float:
        return self.collisions / self.total

    @property
    def bound(self) -> float:
        return self.bound_numerator / self.bound_denominator

    @property
    def passed(self) -> bool:
        return self.collisions * self.bound_denominator <= self.bound_numerator * self.total

    def to_text(self) -> str:
        return render_lines(
            {
                "modulus": self.modulus,
                "collisions": self.collisions,
                "keys": self.total,
                "probability": self.probability,
                "bound": self.bound,
                "result": "pass" if self.passed else "fail",
            }
        )


class UniformityReport(BaseModel):
    """Number of offsets b that send a fixed input to a target value."""

    target: int
    field_solutions: int = Field(description="Solutions with b in [0, p)")
    admissible_solutions: int = Field(description="Solutions with b in [0, 2^n)")

    model_config = {"frozen": True}

    @property
    def passed(self) -> bool:
        return self.field_solutions == 1 and self.admissible_solutions <= 1


class AvalancheReport(TabularReport):
    """Flip frequencies for one input length.

    Attributes:
        input_length: Input size in bytes.
        trials: Random inputs drawn.
        bits: Digest width.
        bias: Frequency matrix of shape (8 * input_length, bits); entry
            [i, j] is how often flipping input bit i flipped output bit j.
        seed: Master seed of the run.
    """

    input_length: int
    trials: int
    bits: int
    bias: np.ndarray = Field(repr=False)
    seed: Optional[int] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @property
    def worst_bias(self) -> float:
        """Largest |frequency - 0.5| over all bit pairs."""
        if self.bias.size == 0:
            return 0.0
        return float(np.max(np.abs(self.bias - 0.5)))

    def to_arrow(self) -> pa.Table:
        in_bits, out_bits = self.bias.shape
        input_bit, output_bit = np.divmod(np.arange(in_bits * out_bits), out_bits)
        return pa.table(
            {
                "input_length": pa.array(np.full(in_bits * out_bits, self.input_length)),
                "input_bit": pa.array(input_bit),
                "output_bit": pa.array(output_bit),
                "frequency": pa.array(self.bias.reshape(-1)),
            }
        )

    def to_text(self) -> str:
        return render_lines(
            {
                "input_length": self.input_length,
                "trials": self.trials,
                "bits": self.bits,
                "seed": self.seed,
                "worst_bias": self.worst_bias,
            }
        )


class ImageFractionPoint(BaseModel):
    """Share of [0, 2^(2n)) hit by products of two n-bit integers."""

    n: int
    distinct_products: int

    model_config = {"frozen": True}

    @property
    def fraction(self) -> float:
        return self.distinct_products / (1 << (2 * self.n))


class ImageFractionReport(TabularReport):
    points: tuple[ImageFractionPoint, ...] = ()

    model_config = {"frozen": True}

    @property
    def strictly_decreasing(self) -> bool:
        """True when each fraction is below the one before it."""
        return all(
            b.distinct_products * 4 ** a.n < a.distinct_products * 4 ** b.n
            for a, b in zip(self.points, self.points[1:])
        )

    def to_arrow(self) -> pa.Table:
        return pa.table(
            {
                "n": pa.array([p.n for p in self.points], type=pa.int64()),
                "distinct_products": pa.array(
                    [p.distinct_products for p in self.points], type=pa.int64()
                ),
                "fraction": pa.array([p.fraction for p in self.points], type=pa.float64()),
            }
        )

    def to_text(self) -> str:
        lines = [f"n={p.n} fraction={p.fraction:.6f}" for p in self.points]
        lines.append(f"strictly_decreasing={_format_value(self.strictly_decreasing)}")
        return "\n".join(lines)


class CollisionReport(BaseModel):
    """Empirical digest collision rate for one input pair."""

    schedules: int
    collisions: int
    ceiling: float
    bits: int
    seed: Optional[int] = None

    model_config = {"frozen": True}

    @property
    def rate(self) -> float:
        return self.collisions / self.schedules if self.schedules else 0.0

    @property
    def passed(self) -> bool:
        return self.rate <= self.ceiling

    def to_text(self) -> str:
        return render_lines(
            {
                "bits": self.bits,
                "seed": self.seed,
                "schedules": self.schedules,
                "collisions": self.collisions,
                "rate": self.rate,
                "ceiling": self.ceiling,
                "result": "pass" if self.passed else "fail",
            }
        )


class BenchRow(BaseModel):
    length: int = Field(description="Input size in bytes")
    bytes_per_ns: float = Field(description="Median throughput")

    model_config = {"frozen": True}


class BenchReport(TabularReport):
    """Throughput over the length grid for one variant."""

    variant: int
    repetitions: int
    rows: tuple[BenchRow, ...] = ()

    model_config = {"frozen": True}

    def to_arrow(self) -> pa.Table:
        return pa.table(
            {
                "length": pa.array([r.length for r in self.rows], type=pa.int64()),
                "bytes_per_ns": pa.array([r.bytes_per_ns for r in self.rows], type=pa.float64()),
            }
        )
