"""Arbitrary-precision reference implementation and brute-force property checks."""

from pmplus.oracle.properties import (
    block_universality_bound,
    check_component_regularity,
    check_delta_universality,
    check_uniformity,
    modulo_bound,
    random_toy_keys,
    random_toy_schedule,
    regularity_sweep,
    tree_modulo_collision_rate,
    universality_bound,
    universality_sweep,
)
from pmplus.oracle.toy import (
    ORACLE_PM32,
    ORACLE_PM64,
    TOY17,
    TOY257,
    ToyKeys,
    ToyParams,
    is_prime,
    oracle_block,
    oracle_bytes_to_sigma,
    oracle_digest_value,
    oracle_tree,
    oracle_tree_sigma,
)

__all__ = [
    # Reference
    "ToyParams",
    "ToyKeys",
    "TOY17",
    "TOY257",
    "ORACLE_PM32",
    "ORACLE_PM64",
    "is_prime",
    "oracle_block",
    "oracle_tree",
    "oracle_tree_sigma",
    "oracle_bytes_to_sigma",
    "oracle_digest_value",
    # Properties
    "check_component_regularity",
    "check_delta_universality",
    "check_uniformity",
    "tree_modulo_collision_rate",
    "block_universality_bound",
    "universality_bound",
    "modulo_bound",
    "random_toy_keys",
    "random_toy_schedule",
    "regularity_sweep",
    "universality_sweep",
]
