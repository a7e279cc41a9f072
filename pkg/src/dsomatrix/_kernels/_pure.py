"""Pure-Python reference kernels.

Both functions mirror ``_ext.pyx`` operation for operation, so the two
backends return bit-identical floats.
"""

from __future__ import annotations

import itertools
import math


def jacobi_eigenvalues(a, tol, max_sweeps):
    """Cyclic Jacobi on a dense symmetric matrix given as a list of rows.

    The matrix is overwritten. Returns ``(diagonal, sweeps, off_norm,
    converged)``; iteration stops once the off-diagonal Frobenius norm is at
    most ``tol`` times the Frobenius norm of the input.
    """
    n = len(a)
    fro2 = 0.0
    for i in range(n):
        row = a[i]
        for j in range(n):
            fro2 += row[j] * row[j]
    target = tol * math.sqrt(fro2)

    sweeps = 0
    while True:
        off2 = 0.0
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                off2 += row[q] * row[q]
        off = math.sqrt(2.0 * off2)
        if off <= target:
            return [a[i][i] for i in range(n)], sweeps, off, True
        if sweeps == max_sweeps:
            return [a[i][i] for i in range(n)], sweeps, off, False
        sweeps += 1

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                app = a[p][p]
                aqq = a[q][q]
                g = 100.0 * abs(apq)
                if sweeps > 4 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p][q] = 0.0
                    a[q][p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                h = t * apq
                a[p][p] = app - h
                a[q][q] = aqq + h
                a[p][q] = 0.0
                a[q][p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r][p]
                    arq = a[r][q]
                    nrp = arp - s * (arq + arp * tau)
                    nrq = arq + s * (arp - arq * tau)
                    a[r][p] = nrp
                    a[p][r] = nrp
                    a[r][q] = nrq
                    a[q][r] = nrq


def min_relabel_code(n, adjacency):
    """Smallest upper-triangle code over all vertex relabelings.

    The code packs the graph6 bit order (x01, x02, x12, x03, ...) into an
    integer with x01 as the most significant bit, so comparing codes is
    comparing graph6 payloads.
    """
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    width = len(pairs)
    best = None
    for perm in itertools.permutations(range(n)):
        code = 0
        for i, j in pairs:
            code = (code << 1) | ((adjacency[perm[i]] >> perm[j]) & 1)
        if best is None or code < best:
            best = code
    return 0 if best is None or width == 0 else best
