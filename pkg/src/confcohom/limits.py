"""Enumeration caps.

Cycle-type-indexed computations scale with the number of partitions of m,
set-partition enumerations with the Bell numbers, and signed iterated
inductions with 2^(m-l).  The caps below keep all engines inside an
interactive budget; CONFCOHOM_MAX_M raises them uniformly, but never above
ABSOLUTE_MAX_M.
"""

import os

ABSOLUTE_MAX_M = 14

DEFAULT_CYCLE_TYPE_MAX_M = 12
DEFAULT_SET_PARTITION_MAX_M = 10
DEFAULT_CHAIN_SPAN_MAX = 12

DEFAULT_CLOSURE_CAP = 3_628_800  # 10!

_ENV_VAR = "CONFCOHOM_MAX_M"


def _env_override() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return min(value, ABSOLUTE_MAX_M)


def cycle_type_max_m() -> int:
    override = _env_override()
    return override if override is not None else DEFAULT_CYCLE_TYPE_MAX_M


def set_partition_max_m() -> int:
    override = _env_override()
    return override if override is not None else DEFAULT_SET_PARTITION_MAX_M


def chain_span_max() -> int:
    override = _env_override()
    return override if override is not None else DEFAULT_CHAIN_SPAN_MAX


def set_partition_hard_cap() -> int:
    """Absolute bound on full set-partition enumeration (Bell growth)."""
    override = _env_override()
    if override is None:
        return 12
    return max(12, override)
