"""Data models for pmplus."""

from pmplus.models.keys import BlockKeys, KeySchedule
from pmplus.models.reports import (
    AvalancheReport,
    BenchReport,
    BenchRow,
    CollisionReport,
    ImageFractionPoint,
    ImageFractionReport,
    RegularityReport,
    UniformityReport,
    UniversalityReport,
    Verdict,
)

__all__ = [
    # Keys
    "BlockKeys",
    "KeySchedule",
    # Reports
    "Verdict",
    "RegularityReport",
    "UniversalityReport",
    "UniformityReport",
    "AvalancheReport",
    "ImageFractionPoint",
    "ImageFractionReport",
    "CollisionReport",
    "BenchRow",
    "BenchReport",
]
