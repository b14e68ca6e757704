"""LZ77 compression with differentially private length padding."""

from ._lzdp import (
    BudgetExceededError,
    Error,
    analyze,
    blocks,
    bounds,
    compress,
    decompress,
    dp_compress,
    global_sensitivity,
    gs_upper_bound,
    local_sensitivity,
    payload_bits,
    quinstr,
    verify_lower_bound,
)

__all__ = [
    "BudgetExceededError",
    "Error",
    "analyze",
    "blocks",
    "bounds",
    "compress",
    "decompress",
    "dp_compress",
    "global_sensitivity",
    "gs_upper_bound",
    "local_sensitivity",
    "payload_bits",
    "quinstr",
    "verify_lower_bound",
]
