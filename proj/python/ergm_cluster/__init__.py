"""Exact ERGM lattice-gas representation and high-temperature cluster expansion."""

from ._ergm_cluster import (
    Error,
    GuardExceeded,
    InvalidArgument,
    Graph,
    Motif,
    banach_norm,
    cluster_partition_sum,
    coefficients,
    exact_density,
    expand,
    gamma_coefficients,
    hom_count,
    hom_density,
    interaction,
    load_motif,
    log_partition,
    norm_threshold,
    optimal_M,
    pinned_density,
    region_bound,
    representation_check,
    solve_ensemble,
    support_families,
    ursell_coefficient,
)

__all__ = [name for name in dir() if not name.startswith("_")]
