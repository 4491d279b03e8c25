"""Pure-Python kernels (numpy, no compiled code).

Same contract as the compiled ``_ckernels`` module; ``krigmean.kernels``
picks one of the two at import time.
"""
import numpy as np


def semivariogram(v):
    v = np.ascontiguousarray(v, dtype=np.float64)
    n = v.shape[0]
    gamma = np.zeros(n)
    for h in range(1, n):
        d = v[:-h] - v[h:]
        gamma[h] = 0.5 * np.dot(d, d) / (n - h)
    return gamma


def covariances(v, hmax):
    """C_hat(h) for h = 0..hmax, each over the n-h overlapping pairs."""
    v = np.ascontiguousarray(v, dtype=np.float64)
    n = v.shape[0]
    out = np.empty(hmax + 1)
    for h in range(hmax + 1):
        head = v[: n - h]
        tail = v[h:]
        m = n - h
        out[h] = np.dot(head, tail) / m - head.sum() * tail.sum() / (m * m)
    return out


def lu_factor(a, pivot_tol):
    """In-place Doolittle LU with partial pivoting.

    Returns ``(lu, piv, bad)`` where ``piv[k]`` is the row swapped with
    row k at step k, and ``bad`` is the first column whose pivot fell
    below ``pivot_tol`` (-1 when the factorization succeeded).
    """
    lu = np.array(a, dtype=np.float64, order="C", copy=True)
    n = lu.shape[0]
    piv = np.arange(n, dtype=np.intp)
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        piv[k] = p
        if abs(lu[p, k]) < pivot_tol:
            return lu, piv, k
        if p != k:
            lu[[k, p], :] = lu[[p, k], :]
        if k + 1 < n:
            lu[k + 1 :, k] /= lu[k, k]
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, piv, -1


def lu_solve(lu, piv, b):
    """Solve for every column of ``b`` (n x m) given a factorization."""
    x = np.array(b, dtype=np.float64, order="C", copy=True)
    n = lu.shape[0]
    for k in range(n):
        p = piv[k]
        if p != k:
            x[[k, p], :] = x[[p, k], :]
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] -= lu[i, i + 1 :] @ x[i + 1 :]
        x[i] /= lu[i, i]
    return x
