"""Diminished Sombor matrix spectra, energies and characteristic polynomials."""

from .charpoly import CharPoly, char_poly_numeric, inner_determinants, path_char_poly
from .closed_form import spec_complete, spec_complete_bipartite, spec_cycle, spec_star
from .matrix import (
    CLUSTER_RTOL,
    DEFAULT_MAX_SWEEPS,
    DEFAULT_TOL,
    DsoMatrix,
    EigenSolverError,
    PreconditionError,
    Spectrum,
    adjacency_matrix,
    adjacency_spectral_radius,
    adjacency_spectrum,
    build_matrix,
    count_clusters,
    distinct_eigenvalue_count,
    dso_spectrum,
    eigenvalues,
    energy,
    spec_regular,
    spectral_radius,
)

__all__ = [
    "CLUSTER_RTOL",
    "DEFAULT_MAX_SWEEPS",
    "DEFAULT_TOL",
    "CharPoly",
    "DsoMatrix",
    "EigenSolverError",
    "PreconditionError",
    "Spectrum",
    "adjacency_matrix",
    "adjacency_spectral_radius",
    "adjacency_spectrum",
    "build_matrix",
    "char_poly_numeric",
    "count_clusters",
    "distinct_eigenvalue_count",
    "dso_spectrum",
    "eigenvalues",
    "energy",
    "inner_determinants",
    "path_char_poly",
    "spec_complete",
    "spec_complete_bipartite",
    "spec_cycle",
    "spec_regular",
    "spec_star",
    "spectral_radius",
]
