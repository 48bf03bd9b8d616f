"""PM+ block hash, tree construction, byte hasher and finalizer."""

from pmplus.hashing.hasher import (
    PMPlusHasher,
    build_sigma,
    format_digest,
    hash_oneshot,
    marker_word,
    unpack_words,
)
from pmplus.hashing.mix import MIX32, MIX64, MixConstants, mix, mix_array, unmix, unmix_array
from pmplus.hashing.multilinear import (
    hash_block_elems,
    hash_block_words,
    hash_partial_elems,
    hash_partial_words,
)
from pmplus.hashing.tree import TreeAccumulator

__all__ = [
    # Block hash
    "hash_block_words",
    "hash_block_elems",
    "hash_partial_words",
    "hash_partial_elems",
    # Tree
    "TreeAccumulator",
    # Bytes
    "PMPlusHasher",
    "hash_oneshot",
    "build_sigma",
    "marker_word",
    "unpack_words",
    "format_digest",
    # Finalizer
    "MixConstants",
    "MIX32",
    "MIX64",
    "mix",
    "unmix",
    "mix_array",
    "unmix_array",
]
