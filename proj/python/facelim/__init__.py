"""Exact computations with Stanley-Reisner algebras and face-diagram limits."""

from ._core import (
    InputError,
    SimplicialComplex,
    aut_generators,
    bk_table,
    ci_detect,
    digest,
    edge_iso_check,
    fat_check,
    higher_limit,
    hilbert_ci_identity,
    hilbert_function,
    hilbert_series,
    kernel_rank,
    koszul_check,
    limit_rank,
    minimal_model,
    parse_complex,
    rank,
    smith_normal_form,
    sr_basis,
    twin_check,
    verify_sharpness,
    __version__,
)

__all__ = [
    "InputError",
    "SimplicialComplex",
    "aut_generators",
    "bk_table",
    "ci_detect",
    "digest",
    "edge_iso_check",
    "fat_check",
    "higher_limit",
    "hilbert_ci_identity",
    "hilbert_function",
    "hilbert_series",
    "kernel_rank",
    "koszul_check",
    "limit_rank",
    "minimal_model",
    "parse_complex",
    "rank",
    "smith_normal_form",
    "sr_basis",
    "twin_check",
    "verify_sharpness",
    "__version__",
]
