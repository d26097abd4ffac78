# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cyclic Jacobi eigenvalue sweeps, compiled.

Mirrors _jacobi_py exactly: deterministic sweep order, fresh
off-diagonal norm per sweep, skip threshold threshold/(4 n^2).
"""

import numpy as np

from libc.math cimport fabs, sqrt


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept:
    cdef double sq = 0.0
    cdef Py_ssize_t i, j
    for i in range(n - 1):
        for j in range(i + 1, n):
            sq += a[i, j] * a[i, j]
    return sqrt(2.0 * sq)


def jacobi_eigenvalues(double[:, ::1] a, double threshold, int max_sweeps):
    """Rotate a symmetric matrix (in place) until the off-diagonal norm
    is at most threshold; returns (sorted eigenvalues, sweeps, off_norm)."""
    cdef Py_ssize_t n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0]]), 0, 0.0
    cdef double off = _off_norm(a, n)
    cdef int sweeps = 0
    cdef double skip = threshold / (4.0 * n * n)
    cdef Py_ssize_t p, q, r
    cdef double apq, app, aqq, theta, t, c, s, tau, h, g, hh
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if fabs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = 0.5 * (aqq - app) / apq
                if fabs(theta) > 1e154:
                    t = 0.5 / theta
                elif theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
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
                    g = a[r, p]
                    hh = a[r, q]
                    a[r, p] = g - s * (hh + tau * g)
                    a[r, q] = hh + s * (g - tau * hh)
                    a[p, r] = a[r, p]
                    a[q, r] = a[r, q]
        sweeps += 1
        off = _off_norm(a, n)
    return np.sort(np.diagonal(np.asarray(a)).copy()), sweeps, off
