"""Statistical and structural quality suites."""

from pmplus.quality.avalanche import avalanche_test
from pmplus.quality.collisions import collision_monte_carlo, toy_collision_probability
from pmplus.quality.equivalence import (
    FROZEN_DIGESTS,
    frozen_digests,
    golden_check,
    golden_schedule,
    golden_vectors,
    production_tree_equivalence,
    toy_tree_equivalence,
)
from pmplus.quality.image_fraction import count_products, image_fraction_report, nh_image_fraction
from pmplus.quality.mixing import mix_roundtrip
from pmplus.quality.reduction import (
    boundary_accumulators,
    exhaustive_toy_reduction,
    reduction_fuzz,
)
from pmplus.quality.shards import run_shards, shard_seeds, split_work

__all__ = [
    "avalanche_test",
    "reduction_fuzz",
    "exhaustive_toy_reduction",
    "boundary_accumulators",
    "collision_monte_carlo",
    "toy_collision_probability",
    "nh_image_fraction",
    "image_fraction_report",
    "count_products",
    "mix_roundtrip",
    "toy_tree_equivalence",
    "production_tree_equivalence",
    "golden_vectors",
    "golden_check",
    "golden_schedule",
    "frozen_digests",
    "FROZEN_DIGESTS",
    "shard_seeds",
    "split_work",
    "run_shards",
]
