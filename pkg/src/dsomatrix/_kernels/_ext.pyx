# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same arithmetic, same order as ``_pure``."""

from libc.math cimport sqrt, fabs


def jacobi_eigenvalues(double[:, ::1] a, double tol, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, p, q, r
    cdef double fro2 = 0.0, off2, off, target
    cdef double apq, app, aqq, g, theta, t, c, s, tau, h, arp, arq, nrp, nrq
    cdef int sweeps = 0

    for i in range(n):
        for j in range(n):
            fro2 += a[i, j] * a[i, j]
    target = tol * sqrt(fro2)

    while True:
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += a[p, q] * a[p, q]
        off = sqrt(2.0 * off2)
        if off <= target:
            return [a[i, i] for i in range(n)], sweeps, off, True
        if sweeps == max_sweeps:
            return [a[i, i] for i in range(n)], sweeps, off, False
        sweeps += 1

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * fabs(apq)
                if sweeps > 4 and fabs(app) + g == fabs(app) and fabs(aqq) + g == fabs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                h = t * apq
                a[p, p] = app - h
                a[q, q] = aqq + h
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r, p]
                    arq = a[r, q]
                    nrp = arp - s * (arq + arp * tau)
                    nrq = arq + s * (arp - arq * tau)
                    a[r, p] = nrp
                    a[p, r] = nrp
                    a[r, q] = nrq
                    a[q, r] = nrq


def min_relabel_code(int n, adjacency):
    # Heap's algorithm over all n! labelings; n <= 8 keeps the code in 28 bits
    cdef unsigned long long adj[8]
    cdef int perm[8]
    cdef int cnt[8]
    cdef int pi[28]
    cdef int pj[28]
    cdef int width = 0, i, j, k, tmp
    cdef unsigned long long code, best

    if n > 8:
        raise ValueError("min_relabel_code supports n <= 8")
    for i in range(n):
        adj[i] = adjacency[i]
        perm[i] = i
        cnt[i] = 0
    for j in range(1, n):
        for i in range(j):
            pi[width] = i
            pj[width] = j
            width += 1
    if width == 0:
        return 0

    best = 0
    for k in range(width):
        best = (best << 1) | ((adj[perm[pi[k]]] >> perm[pj[k]]) & 1)
    i = 1
    while i < n:
        if cnt[i] < i:
            if i % 2 == 0:
                tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
            else:
                tmp = perm[cnt[i]]; perm[cnt[i]] = perm[i]; perm[i] = tmp
            code = 0
            for k in range(width):
                code = (code << 1) | ((adj[perm[pi[k]]] >> perm[pj[k]]) & 1)
            if code < best:
                best = code
            cnt[i] += 1
            i = 1
        else:
            cnt[i] = 0
            i += 1
    return best
