"""Exact theta series, shell enumeration and spherical design strengths of selfdual lattices."""

from ._core import (  # noqa: F401
    DomainError,
    FormParseError,
    ResourceError,
    classify_root_systems,
    coefficient,
    expand_form,
    family_strength,
    gegenbauer_coefficients,
    growth_certificate,
    kernel_strength,
    lattice_invariants,
    scan_zeros,
    shell_count,
    shell_vectors,
    tau,
    verify_identity,
)

__version__ = "0.1.0"
