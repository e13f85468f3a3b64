"""Quadrature and finite-difference residuals of sampled spinor fields."""

from __future__ import annotations

import numpy as np
from scipy.integrate import simpson, trapezoid

from ..algebra import build_gamma_majorana, real_dirac_blocks
from ..core import Grid, PotentialParams, SpinorField


def quadrature_norm(samples: SpinorField) -> float:
    """Integral of ``|phi|^2 + |chi|^2``.

    Composite Simpson on an odd number of nodes, trapezoid on an even number.
    """
    grid = samples.grid
    if grid.n_points < 3:
        raise ValueError("quadrature needs at least 3 points")
    dens = samples.density
    if grid.n_points % 2 == 1:
        return float(simpson(dens, dx=grid.h))
    return float(trapezoid(dens, dx=grid.h))


def _d1_fourth(f, h):
    """4th-order central first derivative on nodes 2 .. N-3."""
    return (f[:-4] - 8.0 * f[1:-3] + 8.0 * f[3:-1] - f[4:]) / (12.0 * h)


def residual_coupled_parts(field: SpinorField, energy: float, params: PotentialParams):
    """Pointwise residuals of the two first-order equations on interior nodes.

    Returns ``(|E phi - i (chi' - W chi)|, |E chi - i (phi' + W phi)|)`` with
    ``W = m + b x``.
    """
    if field.grid.n_points < 5:
        raise ValueError("need at least 5 points for 4th-order differences")
    h = field.grid.h
    x = field.x[2:-2]
    w = params.m + params.b * x
    phi = np.asarray(field.phi, dtype=complex)
    chi = np.asarray(field.chi, dtype=complex)
    dphi = _d1_fourth(phi, h)
    dchi = _d1_fourth(chi, h)
    p, c = phi[2:-2], chi[2:-2]
    r1 = np.abs(energy * p - 1j * (dchi - w * c))
    r2 = np.abs(energy * c - 1j * (dphi + w * p))
    return r1, r2


def residual_coupled(field: SpinorField, energy: float, params: PotentialParams) -> float:
    """Max interior residual of the coupled first-order system."""
    r1, r2 = residual_coupled_parts(field, energy, params)
    return float(max(r1.max(), r2.max()))


def residual_time_domain_samples(u, v, x, dt: float, params: PotentialParams) -> float:
    """Max residual of ``i gamma^mu d_mu psi - (m + b x) psi`` on real samples.

    ``u`` and ``v`` are the two real components, shaped ``(n_t, n_x)``.
    Second-order central differences in both t and x; the operator blocks
    ``i gamma^0`` and ``i gamma^1`` are taken from the Majorana gamma set and
    must be real.
    """
    if not dt > 0:
        raise ValueError("dt must be positive")
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 2 or min(u.shape) < 3:
        raise ValueError("u, v must be matching (n_t >= 3, n_x >= 3) arrays")
    a0, a1 = real_dirac_blocks(build_gamma_majorana())
    if np.any(a0.imag) or np.any(a1.imag):
        raise ValueError("i gamma^mu is not real; Majorana representation required")
    a0, a1 = a0.real, a1.real
    h = x[1] - x[0]

    psi = np.stack([u, v])
    dt_psi = (psi[:, 2:, 1:-1] - psi[:, :-2, 1:-1]) / (2.0 * dt)
    dx_psi = (psi[:, 1:-1, 2:] - psi[:, 1:-1, :-2]) / (2.0 * h)
    core = psi[:, 1:-1, 1:-1]
    w = params.m + params.b * np.asarray(x)[1:-1]
    res = (np.einsum("ij,jtx->itx", a0, dt_psi)
           + np.einsum("ij,jtx->itx", a1, dx_psi) - w * core)
    return float(np.max(np.abs(res)))


def residual_time_domain(mode, t_steps: int, dt: float, grid: Grid) -> float:
    """Space-time residual of the real Majorana field built from ``mode``.

    Samples ``Re[exp(-i E t) (phi, chi)]`` at ``t = 0, dt, ..., (t_steps-1) dt``.
    """
    from ..analytic import real_majorana_field

    if t_steps < 3:
        raise ValueError("t_steps must be >= 3")
    fields = [real_majorana_field(mode, j * dt, grid) for j in range(t_steps)]
    u = np.array([f.phi for f in fields])
    v = np.array([f.chi for f in fields])
    return residual_time_domain_samples(u, v, grid.x, dt, mode.params)
