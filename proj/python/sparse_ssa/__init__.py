"""Sparse suffix array (SSA) and sparse LCP array construction."""

from ._sparse_ssa import (
    ContractError,
    ValidationError,
    compute_b_prime,
    fingerprint,
    main_algo,
    naive_ssa_slcp,
    parameterized_algo,
    sample_positions,
)

__all__ = [
    "ContractError",
    "ValidationError",
    "compute_b_prime",
    "fingerprint",
    "main_algo",
    "naive_ssa_slcp",
    "parameterized_algo",
    "sample_positions",
]
