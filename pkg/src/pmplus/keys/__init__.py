"""Key generation and key file I/O."""

from pmplus.keys.keyfile import (
    MAGIC,
    VERSION,
    fingerprint,
    is_keyfile,
    keyfile_size,
    load,
    read_keyfile,
    save,
    write_keyfile,
)
from pmplus.keys.keygen import draw_multiplier, generate_keys, generate_schedule

__all__ = [
    "generate_schedule",
    "generate_keys",
    "draw_multiplier",
    "MAGIC",
    "VERSION",
    "save",
    "load",
    "read_keyfile",
    "write_keyfile",
    "keyfile_size",
    "is_keyfile",
    "fingerprint",
]
