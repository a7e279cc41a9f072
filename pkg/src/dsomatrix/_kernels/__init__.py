"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension is used when it imports; set ``DSOMATRIX_PURE=1`` to
force the fallback. ``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure

pure = _pure

if os.environ.get("DSOMATRIX_PURE") == "1":
    compiled = None
else:
    try:
        from . import _ext as compiled
    except ImportError:
        compiled = None



def _jacobi_compiled(matrix, tol, max_sweeps):
    work = np.array(matrix, dtype=np.float64, order="C", copy=True)
    return compiled.jacobi_eigenvalues(work, tol, max_sweeps)


def _jacobi_pure(matrix, tol, max_sweeps):
    return _pure.jacobi_eigenvalues(np.asarray(matrix, dtype=np.float64).tolist(), tol, max_sweeps)


if compiled is not None:
    BACKEND = "cython"
    jacobi_eigenvalues = _jacobi_compiled
    min_relabel_code = compiled.min_relabel_code
else:
    BACKEND = "python"
    jacobi_eigenvalues = _jacobi_pure
    min_relabel_code = _pure.min_relabel_code

__all__ = [
    "BACKEND",
    "compiled",
    "jacobi_eigenvalues",
    "min_relabel_code",
    "pure",
]
