"""Independent numerical recomputation of the spectrum and residual checks.

Nothing here consults the closed-form solution for its answers: the
finite-difference and shooting spectra are derived from the second-order
equation alone.
"""

from ..core import Grid, SpinorField, count_sign_changes
from .fd import build_fd_hamiltonian, energies_from_eigenvalues, fd_eigenvalues, spectrum_fd
from .residuals import (
    quadrature_norm,
    residual_coupled,
    residual_coupled_parts,
    residual_time_domain,
    residual_time_domain_samples,
)
from .shooting import (
    ShootingError,
    ShootingResult,
    energy_from_ratio,
    find_eigen_shooting,
    oscillation_count,
    shoot_once,
    spectrum_shooting,
)
from .tridiag import EigenResult, TridiagonalSym, eigen_lowest_k, sturm_count

__all__ = [
    "Grid", "SpinorField", "count_sign_changes",
    "TridiagonalSym", "EigenResult", "eigen_lowest_k", "sturm_count",
    "build_fd_hamiltonian", "fd_eigenvalues", "energies_from_eigenvalues", "spectrum_fd",
    "ShootingResult", "ShootingError", "shoot_once", "find_eigen_shooting",
    "oscillation_count", "spectrum_shooting", "energy_from_ratio",
    "quadrature_norm", "residual_coupled", "residual_coupled_parts",
    "residual_time_domain", "residual_time_domain_samples",
]
