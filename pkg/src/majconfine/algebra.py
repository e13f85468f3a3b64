"""Gamma matrices in the Majorana representation and their algebraic checks.

With the metric ``eta = diag(-1, +1)`` the gamma matrices satisfy

    {gamma^mu, gamma^nu} = -2 eta^{mu nu} I,

are purely imaginary, and obey ``(gamma^mu)^dagger = gamma^0 gamma^mu gamma^0``.
Because ``i gamma^mu`` is then real, the Dirac operator with a scalar
potential maps real spinor fields to real spinor fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_TOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

METRIC = np.diag([-1.0, 1.0])


@dataclass(frozen=True)
class GammaSet:
    gamma0: np.ndarray
    gamma1: np.ndarray
    metric_signature: tuple = (-1, +1)

    def __post_init__(self):
        for name in ("gamma0", "gamma1"):
            a = np.asarray(getattr(self, name), dtype=complex)
            if a.shape != (2, 2):
                raise ValueError(f"{name} must be a 2x2 matrix")
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @property
    def matrices(self) -> tuple:
        return (self.gamma0, self.gamma1)

    @property
    def eta(self) -> np.ndarray:
        return np.diag(np.asarray(self.metric_signature, dtype=float))


@dataclass
class CliffordReport:
    deviations: dict
    tol: float
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values())


@dataclass
class RealityReport:
    # per-matrix deviations keyed by index mu
    reality: dict
    hermiticity: dict
    tol: float
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def max_deviation(self) -> float:
        return max(list(self.reality.values()) + list(self.hermiticity.values()))


def build_gamma_majorana() -> GammaSet:
    """gamma^0 = sigma^2, gamma^1 = i sigma^3 with metric (-, +)."""
    return GammaSet(SIGMA2.copy(), 1j * SIGMA3)


def anticommutator(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return a @ b + b @ a


def _check_tol(tol):
    if not tol > 0:
        raise ValueError("tol must be positive")


def check_clifford(g: GammaSet, tol: float = DEFAULT_TOL) -> CliffordReport:
    """Max-entry deviation of ``{g^mu, g^nu} + 2 eta^{mu nu} I`` for every pair."""
    _check_tol(tol)
    eta = g.eta
    deviations = {}
    failures = []
    for mu, a in enumerate(g.matrices):
        for nu, b in enumerate(g.matrices):
            dev = float(np.max(np.abs(anticommutator(a, b) + 2 * eta[mu, nu] * IDENTITY)))
            deviations[(mu, nu)] = dev
            if not dev < tol:
                failures.append((mu, nu))
    return CliffordReport(deviations, tol, failures)


def check_majorana_reality(g: GammaSet, tol: float = DEFAULT_TOL) -> RealityReport:
    """Check ``(g^mu)* = -g^mu`` and ``(g^mu)^dagger = g^0 g^mu g^0``."""
    _check_tol(tol)
    g0 = g.gamma0
    reality, herm, failures = {}, {}, []
    for mu, a in enumerate(g.matrices):
        reality[mu] = float(np.max(np.abs(a.conj() + a)))
        herm[mu] = float(np.max(np.abs(a.conj().T - g0 @ a @ g0)))
        if not reality[mu] < tol:
            failures.append(("reality", mu))
        if not herm[mu] < tol:
            failures.append(("adjoint", mu))
    return RealityReport(reality, herm, tol, failures)


def real_dirac_blocks(g: GammaSet):
    """Return ``(i gamma^0, i gamma^1)``; both are real for a Majorana set."""
    return 1j * g.gamma0, 1j * g.gamma1
