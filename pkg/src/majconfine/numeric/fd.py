"""Finite-difference spectrum of the decoupled second-order equation.

The upper component obeys ``-phi'' + b^2 (x + x0)^2 phi = lambda phi`` with
``lambda = E^2 + b``. A three-point stencil with Dirichlet walls at the grid
ends turns this into a symmetric tridiagonal eigenproblem.
"""

from __future__ import annotations

import math

import numpy as np

from ..core import Grid, PotentialParams
from .tridiag import EigenResult, TridiagonalSym, eigen_lowest_k


def build_fd_hamiltonian(params: PotentialParams, grid: Grid) -> TridiagonalSym:
    """Discretize ``-d^2/dx^2 + b^2 (x + x0)^2`` on the interior grid nodes."""
    grid.check_support(params)
    h = grid.h
    x = grid.x[1:-1]
    diag = 2.0 / h ** 2 + params.b ** 2 * (x + params.x0) ** 2
    off = np.full(x.size - 1, -1.0 / h ** 2)
    return TridiagonalSym(diag, off)


def fd_eigenvalues(params: PotentialParams, grid: Grid, k: int,
                   tol: float = 1e-12, workers: int | None = None) -> EigenResult:
    """Lowest k values of ``lambda = E^2 + b``."""
    return eigen_lowest_k(build_fd_hamiltonian(params, grid), k, tol, workers, grid)


def energies_from_eigenvalues(lams, b: float) -> np.ndarray:
    """Map ``lambda_n`` to ``E_n = sqrt(lambda_n - b)``.

    Only the ground state may sit below ``b`` (its exact energy is 0); any
    other level below ``b`` means the grid does not resolve the spectrum.
    """
    out = []
    for n, lam in enumerate(lams):
        gap = lam - b
        if gap < 0:
            if n > 0:
                raise ArithmeticError(
                    f"level {n}: lambda - b = {gap:.3e} < 0, grid too coarse")
            gap = 0.0
        out.append(math.sqrt(gap))
    return np.array(out)


def spectrum_fd(params: PotentialParams, grid: Grid, k: int,
                tol: float = 1e-12, workers: int | None = None) -> np.ndarray:
    """Energies ``E_0 .. E_{k-1}`` (positive branch) from the FD eigenvalues."""
    res = fd_eigenvalues(params, grid, k, tol, workers)
    return energies_from_eigenvalues(res.values, params.b)
