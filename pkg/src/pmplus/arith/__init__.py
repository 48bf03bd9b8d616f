"""Exact word arithmetic modulo pseudo+Mersenne primes."""

from pmplus.arith.params import (
    PM32,
    PM64,
    PRODUCTION_LEVELS,
    PRODUCTION_PARAMS,
    WideParams,
    params_for_bits,
)
from pmplus.arith.wide import (
    FieldElement,
    TripleAccumulator,
    acc3_add,
    accumulator_from_int,
    field_value,
    is_canonical,
    lift,
    mod_p,
    mul_field,
    mul_wide,
    reduce2_final,
    reduce3_to_2,
)

__all__ = [
    # Parameters
    "WideParams",
    "PM32",
    "PM64",
    "PRODUCTION_LEVELS",
    "PRODUCTION_PARAMS",
    "params_for_bits",
    # Values
    "FieldElement",
    "TripleAccumulator",
    "accumulator_from_int",
    "field_value",
    "is_canonical",
    "lift",
    # Operations
    "mul_wide",
    "mul_field",
    "acc3_add",
    "reduce3_to_2",
    "reduce2_final",
    "mod_p",
]
