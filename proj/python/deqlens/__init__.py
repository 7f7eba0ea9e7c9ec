"""Python bindings for the deqlens matrix-analysis core."""

from ._deqlens import (
    DeqlensError,
    SparseHermitianMatrix,
    classify_json,
    corollary_family_check,
    diag_power_family,
    eigenvalues,
    frobenius_norm,
    identity,
    mu,
    mu_objective,
    random_block_hermitian,
    random_support_hermitian,
    read_matrix_market,
    s_p,
    s_zero,
    spectrum,
    write_matrix_market,
)

__all__ = [
    "DeqlensError",
    "SparseHermitianMatrix",
    "classify_json",
    "corollary_family_check",
    "diag_power_family",
    "eigenvalues",
    "frobenius_norm",
    "identity",
    "mu",
    "mu_objective",
    "random_block_hermitian",
    "random_support_hermitian",
    "read_matrix_market",
    "s_p",
    "s_zero",
    "spectrum",
    "write_matrix_market",
]
