"""Solving the bordered kriging system by LU with partial pivoting."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import SingularSystem

PIVOT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class KrigingSolution:
    weights: np.ndarray
    mu: float
    j: int
    t: int | None = None

    @property
    def n(self):
        return len(self.weights)


class Factorization:
    """LU factors of one kriging matrix, reusable for any number of targets."""

    def __init__(self, matrix, pivot_tol=PIVOT_TOL, t=None):
        a = np.asarray(matrix, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        lu, piv, bad = kernels.lu_factor(a, pivot_tol)
        if bad >= 0:
            raise SingularSystem(int(bad), float(lu[piv[bad], bad]), t=t)
        lu.setflags(write=False)
        piv.setflags(write=False)
        self.lu = lu
        self.piv = piv
        self.t = t

    @property
    def size(self):
        return self.lu.shape[0]

    def solve_many(self, targets):
        """Solve for every column of ``targets``; returns an array of the same shape."""
        b = np.asarray(targets, dtype=np.float64)
        if b.ndim == 1:
            return kernels.lu_solve(self.lu, self.piv, b[:, None])[:, 0]
        return kernels.lu_solve(self.lu, self.piv, b)

    def solve(self, target, j=None):
        x = self.solve_many(target)
        return KrigingSolution(x[:-1].copy(), float(x[-1]), j, self.t)


def solve(system, pivot_tol=PIVOT_TOL, t=None) -> KrigingSolution:
    return Factorization(system.matrix, pivot_tol, t=t).solve(system.target, j=system.j)


def residual_inf(system, sol: KrigingSolution) -> float:
    x = np.append(sol.weights, sol.mu)
    return float(np.max(np.abs(system.matrix @ x - system.target)))
