from __future__ import annotations

import numpy as np
import pytest

from dsomatrix import BACKEND, _kernels
from dsomatrix.graphs import enumerate_labeled
from dsomatrix.spectral import build_matrix

needs_ext = pytest.mark.skipif(_kernels.compiled is None, reason="compiled extension not built")


def test_backend_reported():
    assert BACKEND in ("cython", "python")
    assert (BACKEND == "cython") == (_kernels.compiled is not None)


@needs_ext
def test_jacobi_backends_bit_identical():
    for k, g in enumerate(enumerate_labeled(5)):
        a = build_matrix(g).entries
        fast = _kernels._jacobi_compiled(a, 1e-12, 100)
        slow = _kernels._jacobi_pure(a, 1e-12, 100)
        assert list(fast[0]) == list(slow[0]), k
        assert fast[1:] == slow[1:]


@needs_ext
def test_jacobi_backends_agree_on_dense_random():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((15, 15))
    a = a + a.T
    fast = _kernels._jacobi_compiled(a, 1e-12, 100)
    slow = _kernels._jacobi_pure(a, 1e-12, 100)
    assert list(fast[0]) == list(slow[0])


@needs_ext
def test_relabel_code_backends_agree():
    for g in enumerate_labeled(5):
        adj = list(g.adjacency)
        assert _kernels.compiled.min_relabel_code(5, adj) == _kernels.pure.min_relabel_code(5, adj)


def test_pure_kernel_handles_trivial_sizes():
    assert _kernels._jacobi_pure(np.zeros((0, 0)), 1e-12, 10)[0] == []
    diag, sweeps, off, ok = _kernels._jacobi_pure(np.array([[2.0]]), 1e-12, 10)
    assert list(diag) == [2.0] and ok
