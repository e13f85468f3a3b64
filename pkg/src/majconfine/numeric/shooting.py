"""Shooting solver for ``phi'' = (r^2 - beta/b) phi`` in oscillator units.

Both tails are started from the decaying asymptotic form and integrated
inward with fixed-step RK4 to the potential minimum ``r = 0``. The mismatch
is the normalized Wronskian of the two pieces there,

    (phi_L' phi_R - phi_L phi_R') / (|(phi_L, phi_L')| |(phi_R, phi_R')|),

which is the sine of the angle between the two log-derivatives. Unlike a
raw log-derivative difference it stays finite at odd states, where
``phi(0) = 0``, and changes sign at every eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core import Grid, PotentialParams, count_sign_changes

DEFAULT_R_GRID = Grid(-8.0, 8.0, 2001)


class ShootingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ShootingResult:
    beta_over_b: float
    node_count: int
    mismatch: float
    bracket: tuple
    iterations: int = 0

    def energy(self, b: float) -> float:
        return energy_from_ratio(self.beta_over_b, b)


def energy_from_ratio(beta_over_b: float, b: float) -> float:
    """``E = sqrt(b (beta/b - 1))``, clamped at 0 only for the ground state region."""
    gap = beta_over_b - 1.0
    if gap < 0:
        if gap < -0.5:
            raise ArithmeticError(f"beta/b = {beta_over_b} is below the ground state")
        gap = 0.0
    return math.sqrt(b * gap)


def _rk4(eps, r0, r1, steps):
    """Integrate from ``r0`` to ``r1`` with decaying initial data at ``r0``."""
    h = (r1 - r0) / steps
    y = math.exp(-0.5 * r0 * r0)
    p = y * (-r0 + (eps - 1.0) / (2.0 * r0))
    r = r0
    ys = [y]
    for _ in range(steps):
        rm = r + 0.5 * h
        r4 = r + h
        k1y, k1p = p, (r * r - eps) * y
        y2, p2 = y + 0.5 * h * k1y, p + 0.5 * h * k1p
        k2y, k2p = p2, (rm * rm - eps) * y2
        y3, p3 = y + 0.5 * h * k2y, p + 0.5 * h * k2p
        k3y, k3p = p3, (rm * rm - eps) * y3
        y4, p4 = y + h * k3y, p + h * k3p
        k4y, k4p = p4, (r4 * r4 - eps) * y4
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        r = r4
        ys.append(y)
    if not (math.isfinite(y) and math.isfinite(p)):
        raise ShootingError(f"integration overflowed for beta/b trial {eps!r}")
    return ys, y, p


def _steps(length, h):
    return max(1, round(length / h))


def _check_r_grid(r_grid):
    if r_grid.x_min > -8.0 or r_grid.x_max < 8.0:
        raise ValueError("r-grid must span at least [-8, 8]")


def shoot_once(params: PotentialParams, beta_over_b_trial: float,
               r_grid: Grid = DEFAULT_R_GRID) -> ShootingResult:
    """Integrate both tails to ``r = 0`` and report mismatch and node count.

    ``params`` does not enter the r-space equation; it is accepted so the
    call mirrors the other spectrum routines.
    """
    eps = float(beta_over_b_trial)
    if not eps > 0:
        raise ValueError("beta/b trial must be positive")
    _check_r_grid(r_grid)
    h = r_grid.h
    left, yl, pl = _rk4(eps, r_grid.x_min, 0.0, _steps(-r_grid.x_min, h))
    right, yr, pr = _rk4(eps, r_grid.x_max, 0.0, _steps(r_grid.x_max, h))

    nl = math.hypot(yl, pl)
    nr = math.hypot(yr, pr)
    mismatch = (pl * yr - yl * pr) / (nl * nr)

    # best-fit scale of the right piece onto the left one at the junction
    s = (yl * yr + pl * pr) / (nr * nr)
    joined = left[:-1] + [s * v for v in reversed(right)]
    nodes = count_sign_changes(joined)
    return ShootingResult(eps, nodes, mismatch, (eps, eps))


def oscillation_count(beta_over_b: float, r_grid: Grid = DEFAULT_R_GRID) -> int:
    """Zeros of the left-started solution across the whole r-grid.

    By Sturm oscillation this equals the number of eigenvalues below the
    trial value (up to tail truncation effects of order ``exp(-R^2)``).
    """
    eps = float(beta_over_b)
    ys, _, _ = _rk4(eps, r_grid.x_min, r_grid.x_max, _steps(r_grid.x_max - r_grid.x_min, r_grid.h))
    # no dead-band: the solution spans many decades once it diverges at the far wall
    return count_sign_changes(ys, deadband=0.0)


def find_eigen_shooting(params: PotentialParams, n: int, tol: float = 1e-10,
                        r_grid: Grid = DEFAULT_R_GRID) -> ShootingResult:
    """Locate the n-th eigenvalue of ``beta/b`` by node bracketing and bisection."""
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    if not tol > 0:
        raise ValueError("tol must be positive")
    _check_r_grid(r_grid)

    lo, hi = 0.0, 4.0 * n + 8.0
    if oscillation_count(hi, r_grid) < n + 1:
        raise ShootingError(f"failed to bracket level {n} within [0, {hi:g}]")
    c_lo, c_hi = 0, oscillation_count(hi, r_grid)
    iters = 0
    # shrink until exactly one eigenvalue (the n-th) lies in (lo, hi)
    while not (c_lo == n and c_hi == n + 1):
        mid = 0.5 * (lo + hi)
        c = oscillation_count(mid, r_grid)
        if c <= n:
            lo, c_lo = mid, c
        else:
            hi, c_hi = mid, c
        iters += 1
        if iters > 200:
            raise ShootingError(f"failed to bracket level {n} within [0, {4 * n + 8:g}]")

    # the lower bracket must stay positive for shoot_once
    lo = max(lo, 1e-3)
    f_lo = shoot_once(params, lo, r_grid).mismatch
    f_hi = shoot_once(params, hi, r_grid).mismatch
    if f_lo * f_hi > 0:
        raise ShootingError(f"mismatch does not change sign on [{lo:g}, {hi:g}] for level {n}")
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = shoot_once(params, mid, r_grid).mismatch
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        iters += 1

    final = shoot_once(params, 0.5 * (lo + hi), r_grid)
    return ShootingResult(final.beta_over_b, final.node_count, final.mismatch, (lo, hi), iters)


def spectrum_shooting(params: PotentialParams, k: int, tol: float = 1e-10,
                      r_grid: Grid = DEFAULT_R_GRID) -> list:
    """Shooting results for levels ``0 .. k-1``."""
    return [find_eigen_shooting(params, n, tol, r_grid) for n in range(k)]
