# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: semivariogram, lagged covariances, dense LU.

Mirrors ``_pykernels`` exactly; see that module for the contract.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()


def semivariogram(v):
    cdef const double[::1] x = np.ascontiguousarray(v, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t h, j
    cdef double acc, d
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] g = out
    with nogil:
        for h in range(1, n):
            acc = 0.0
            for j in range(n - h):
                d = x[j] - x[j + h]
                acc = acc + d * d
            g[h] = 0.5 * acc / (n - h)
    return out


def covariances(v, Py_ssize_t hmax):
    cdef const double[::1] x = np.ascontiguousarray(v, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t h, j, m
    cdef double sp, sa, sb
    out = np.empty(hmax + 1, dtype=np.float64)
    cdef double[::1] c = out
    with nogil:
        for h in range(hmax + 1):
            m = n - h
            sp = 0.0
            sa = 0.0
            sb = 0.0
            for j in range(m):
                sp = sp + x[j] * x[j + h]
                sa = sa + x[j]
                sb = sb + x[j + h]
            c[h] = sp / m - sa * sb / (<double>m * m)
    return out


def lu_factor(a, double pivot_tol):
    lu_arr = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] lu = lu_arr
    cdef Py_ssize_t n = lu.shape[0]
    piv_arr = np.arange(n, dtype=np.intp)
    cdef Py_ssize_t[::1] piv = piv_arr
    cdef Py_ssize_t i, j, k, p
    cdef double best, tmp, f
    cdef Py_ssize_t bad = -1
    with nogil:
        for k in range(n):
            p = k
            best = fabs(lu[k, k])
            for i in range(k + 1, n):
                if fabs(lu[i, k]) > best:
                    best = fabs(lu[i, k])
                    p = i
            piv[k] = p
            if best < pivot_tol:
                bad = k
                break
            if p != k:
                for j in range(n):
                    tmp = lu[k, j]
                    lu[k, j] = lu[p, j]
                    lu[p, j] = tmp
            for i in range(k + 1, n):
                f = lu[i, k] / lu[k, k]
                lu[i, k] = f
                if f != 0.0:
                    for j in range(k + 1, n):
                        lu[i, j] = lu[i, j] - f * lu[k, j]
    return lu_arr, piv_arr, bad


def lu_solve(lu_in, piv_in, b):
    cdef const double[:, ::1] lu = np.ascontiguousarray(lu_in, dtype=np.float64)
    cdef const Py_ssize_t[::1] piv = np.ascontiguousarray(piv_in, dtype=np.intp)
    x_arr = np.array(b, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] x = x_arr
    cdef Py_ssize_t n = lu.shape[0]
    cdef Py_ssize_t m = x.shape[1]
    cdef Py_ssize_t i, k, c, p
    cdef double tmp, f
    with nogil:
        for k in range(n):
            p = piv[k]
            if p != k:
                for c in range(m):
                    tmp = x[k, c]
                    x[k, c] = x[p, c]
                    x[p, c] = tmp
        for i in range(1, n):
            for k in range(i):
                f = lu[i, k]
                if f != 0.0:
                    for c in range(m):
                        x[i, c] = x[i, c] - f * x[k, c]
        for i in range(n - 1, -1, -1):
            for k in range(i + 1, n):
                f = lu[i, k]
                if f != 0.0:
                    for c in range(m):
                        x[i, c] = x[i, c] - f * x[k, c]
            f = lu[i, i]
            for c in range(m):
                x[i, c] = x[i, c] / f
    return x_arr
