"""Diminished Sombor matrix, eigensolver front end and spectral summaries."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .. import _kernels
from ..graphs import Graph, classify
from ..indices import edge_weight

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100
CLUSTER_RTOL = 1e-7


class EigenSolverError(RuntimeError):
    """Jacobi sweeps ran out before the off-diagonal norm met the tolerance."""

    def __init__(self, residual: float, sweeps: int, tol: float, witness: str | None = None):
        message = (
            f"Jacobi did not converge in {sweeps} sweeps: off-diagonal norm {residual:.3e} "
            f"exceeds tol {tol:.1e} relative"
        )
        if witness is not None:
            message += f" (graph6 {witness})"
        super().__init__(message)
        self.residual = residual
        self.sweeps = sweeps
        self.tol = tol
        self.witness = witness

    def with_witness(self, witness: str) -> EigenSolverError:
        return EigenSolverError(self.residual, self.sweeps, self.tol, witness)

    def __reduce__(self):
        return (EigenSolverError, (self.residual, self.sweeps, self.tol, self.witness))


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class DsoMatrix:
    n: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


def build_matrix(g: Graph) -> DsoMatrix:
    a = np.zeros((g.n, g.n))
    d = g.degrees
    for i, j in g.edges:
        a[i, j] = a[j, i] = edge_weight(d[i], d[j])
    return DsoMatrix(g.n, a)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1.0
    return a


def count_clusters(descending: Sequence[float], tol: float) -> int:
    """Number of groups when consecutive sorted values closer than ``tol`` merge."""
    if not descending:
        return 0
    t = 1
    for prev, cur in zip(descending, descending[1:]):
        if prev - cur > tol:
            t += 1
    return t


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalues with cluster bookkeeping.

    ``cluster_tol`` is ``1e-7 * max(1, |lambda_1|)``; ``t`` counts clusters
    (distinct eigenvalues). ``sweeps`` and ``residual`` describe the solve and
    are zero for closed-form spectra.
    """

    eigenvalues: tuple[float, ...]
    cluster_tol: float
    t: int
    solver_tol: float = 0.0
    sweeps: int = 0
    residual: float = 0.0

    @classmethod
    def from_values(cls, values, solver_tol=0.0, sweeps=0, residual=0.0) -> Spectrum:
        ordered = tuple(sorted((float(v) for v in values), reverse=True))
        scale = max([1.0] + [abs(v) for v in ordered])
        ctol = CLUSTER_RTOL * scale
        return cls(ordered, ctol, count_clusters(ordered, ctol), solver_tol, sweeps, residual)

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)


def eigenvalues(
    matrix: DsoMatrix | np.ndarray,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    """Full spectrum of a symmetric matrix by cyclic Jacobi rotations."""
    a = matrix.entries if isinstance(matrix, DsoMatrix) else np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    diag, sweeps, off, converged = _kernels.jacobi_eigenvalues(a, tol, max_sweeps)
    if not converged:
        raise EigenSolverError(off, sweeps, tol)
    return Spectrum.from_values(diag, tol, sweeps, off)


def dso_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues(build_matrix(g), tol)


def adjacency_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues(adjacency_matrix(g), tol)


def spectral_radius(s: Spectrum) -> float:
    if not s.eigenvalues:
        raise ValueError("spectral radius of an empty spectrum")
    return s.eigenvalues[0]


def energy(s: Spectrum) -> float:
    return math.fsum(abs(x) for x in s.eigenvalues)


def adjacency_spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(adjacency_spectrum(g, tol))


def distinct_eigenvalue_count(s: Spectrum) -> int:
    return s.t


def spec_regular(g: Graph, adjacency: Spectrum) -> Spectrum:
    """DSO spectrum of a connected regular graph: adjacency spectrum times sqrt(2)/2."""
    cls = classify(g)
    if not (cls.is_regular and cls.is_connected):
        raise PreconditionError("spec_regular needs a connected regular graph")
    half_root2 = math.sqrt(2.0) / 2.0
    return Spectrum.from_values(half_root2 * x for x in adjacency.eigenvalues)
