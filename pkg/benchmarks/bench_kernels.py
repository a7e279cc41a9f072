"""Compiled vs pure-Python kernel timings on the workloads the package runs.

    python3 benchmarks/bench_kernels.py [--order 6] [--repeat 3]

Both backends are called through the same adapters the package uses, and
their outputs are compared so a speedup never hides a divergence.
"""

from __future__ import annotations

import argparse
import time

from dsomatrix import _kernels
from dsomatrix.graphs import enumerate_labeled
from dsomatrix.spectral import build_matrix


def best_of(repeat: int, func) -> tuple[float, object]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func()
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=6, help="enumerate all labeled graphs of this order")
    ap.add_argument("--canon-count", type=int, default=3000, help="graphs fed to the relabeling kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graphs = list(enumerate_labeled(args.order))
    matrices = [build_matrix(g).entries for g in graphs]
    adjacency = [list(g.adjacency) for g in graphs[: args.canon_count]]
    n = args.order

    workloads = {
        f"jacobi x{len(matrices)} (n={n})": {
            "python": lambda: [_kernels._jacobi_pure(a, 1e-12, 100)[0] for a in matrices],
            "cython": lambda: [list(_kernels._jacobi_compiled(a, 1e-12, 100)[0]) for a in matrices],
        },
        f"min relabel code x{len(adjacency)} (n={n})": {
            "python": lambda: [_kernels.pure.min_relabel_code(n, adj) for adj in adjacency],
            "cython": lambda: [_kernels.compiled.min_relabel_code(n, adj) for adj in adjacency],
        },
    }

    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'workload':<34} {'python s':>10} {'cython s':>10} {'speedup':>8}  identical")
    for name, impls in workloads.items():
        py_t, py_out = best_of(args.repeat, impls["python"])
        if _kernels.compiled is None:
            print(f"{name:<34} {py_t:>10.3f} {'n/a':>10} {'n/a':>8}  n/a")
            continue
        cy_t, cy_out = best_of(args.repeat, impls["cython"])
        print(f"{name:<34} {py_t:>10.3f} {cy_t:>10.3f} {py_t / cy_t:>7.1f}x  {py_out == cy_out}")


if __name__ == "__main__":
    main()
