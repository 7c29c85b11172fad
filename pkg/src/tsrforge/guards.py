"""Brute-force scale guards.

Exceeding a guard raises ScaleExceeded with the offending bound; nothing is
ever silently truncated.  TSRFORGE_GUARD_BITS overrides both default bounds.
"""

import os

from .errors import ScaleExceeded

ENUMERATION_BITS = 22
FIELD_BITS = 24
ENV_VAR = "TSRFORGE_GUARD_BITS"


def guard_bits(kind: str) -> int:
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return {"enumeration": ENUMERATION_BITS, "field": FIELD_BITS}[kind]


def check_enumeration(size: int, what: str = "candidate space") -> None:
    check_custom(size, guard_bits("enumeration"), what)


def check_field(size: int, what: str = "state space") -> None:
    check_custom(size, guard_bits("field"), what)


def check_custom(size: int, bits: int, what: str) -> None:
    if size > (1 << bits):
        raise ScaleExceeded(f"{what} of {size} exceeds the 2^{bits} guard")
