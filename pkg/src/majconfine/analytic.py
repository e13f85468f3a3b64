"""Closed-form bound states of the Majorana fermion in a linear scalar potential.

The stationary spinor ``exp(-i E t) (phi, chi)`` obeys

    E phi = i (d/dx - m - b x) chi,
    E chi = i (d/dx + m + b x) phi.

Eliminating ``chi`` gives an oscillator equation for ``phi`` in the variable
``r = sqrt(b) (x + m/b)``,

    phi'' - r^2 phi + (beta / b) phi = 0,    beta = E^2 + b,

whose normalizable solutions are ``exp(-r^2/2) F(r)`` with ``F`` a terminating
power series. Termination requires ``beta / b = 2n + 1``, hence
``E_n = +/- sqrt(2 n b)``, independent of the mass.

Conventions
-----------
* ``beta`` is identified as ``E^2 + b``; this is the only choice that makes
  the ``x`` and ``r`` forms of the oscillator equation agree.
* The zero mode (``n = 0``, ``E = 0``) has ``chi = 0``: the other solution of
  the first equation at ``E = 0`` grows like ``exp(+b x^2 / 2)``.
* Phase: ``phi`` is real and positive as ``r -> +inf``; ``chi`` is then
  purely imaginary. The sign of the energy only flips ``chi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np
from scipy.integrate import simpson

from .core import Grid, PotentialParams, SpinorField

__all__ = [
    "PotentialParams", "CoefficientSeries", "Mode", "QuadratureSpec",
    "energy_level", "level_spacing", "quantization_ratio", "beta_from_energy",
    "hermite_coeffs", "series_coefficients", "eval_F", "eval_F_prime",
    "to_oscillator_coordinate", "build_mode", "normalize_mode", "phi_value",
    "phi_prime", "chi_value", "mode_field", "real_majorana_field",
]


def _check_b(b):
    if not b > 0:
        raise ValueError("b must be positive")


def _check_n(n):
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")


def energy_level(n: int, b: float, sign: int = +1) -> float:
    """Energy ``sign * sqrt(2 n b)`` of the n-th level."""
    _check_n(n)
    _check_b(b)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # + 0.0 folds the -0.0 of the negative-branch zero mode into 0.0
    return sign * math.sqrt(2 * n * b) + 0.0


def level_spacing(n: int, b: float) -> float:
    """``E_{n+1} - E_n`` on the positive branch; strictly decreasing in n."""
    _check_n(n)
    _check_b(b)
    return math.sqrt(2 * (n + 1) * b) - math.sqrt(2 * n * b)


def quantization_ratio(n: int) -> int:
    """``beta / b = 2n + 1``, the value at which the series terminates."""
    _check_n(n)
    return 2 * n + 1


def beta_from_energy(energy: float, b: float) -> float:
    return energy * energy + b


@dataclass(frozen=True)
class CoefficientSeries:
    """Coefficients ``a_0 .. a_n`` of ``F(r) = sum a_k r^k`` (exact rationals)."""

    n: int
    coeffs: tuple
    parity: str

    @property
    def beta_over_b(self) -> Fraction:
        return Fraction(2 * self.n + 1)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def next_coefficient(self, k: int) -> Fraction:
        """Apply the recurrence once: ``a_{k+2}`` from ``a_k``."""
        a_k = self.coeffs[k] if k < len(self.coeffs) else Fraction(0)
        return _step(k, self.beta_over_b) * a_k

    def termination_coefficient(self) -> Fraction:
        """``a_{n+2}``, which must vanish identically."""
        return self.next_coefficient(self.n)

    def as_floats(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])


def _step(k, ratio):
    return (2 * k + 1 - ratio) / Fraction((k + 2) * (k + 1))


def series_coefficients(beta_over_b, parity: int, k_max: int) -> list:
    """Raw recurrence output up to ``a_{k_max}`` for an arbitrary ratio.

    ``parity`` 0 seeds ``a_0 = 1``, parity 1 seeds ``a_1 = 1``. No truncation
    is applied, so a non-quantized ratio gives a non-terminating tail.
    """
    ratio = Fraction(beta_over_b)
    a = [Fraction(0)] * (k_max + 1)
    if parity > k_max:
        return a
    a[parity] = Fraction(1)
    for k in range(parity, k_max - 1, 2):
        a[k + 2] = _step(k, ratio) * a[k]
    return a


def hermite_coeffs(n: int) -> CoefficientSeries:
    """Terminating series of degree n (seeded with ``a_0 = 1`` or ``a_1 = 1``)."""
    _check_n(n)
    coeffs = series_coefficients(quantization_ratio(n), n % 2, n)
    return CoefficientSeries(n, tuple(coeffs), "even" if n % 2 == 0 else "odd")


def _horner(c, r):
    out = np.zeros_like(r) + c[-1]
    for a in c[-2::-1]:
        out = out * r + a
    return out


def eval_F(series: CoefficientSeries, r):
    r = np.asarray(r, dtype=float)
    return _horner(series.as_floats(), r)


def eval_F_prime(series: CoefficientSeries, r):
    r = np.asarray(r, dtype=float)
    c = series.as_floats()
    if len(c) == 1:
        return np.zeros_like(r)
    return _horner(c[1:] * np.arange(1, len(c)), r)


def to_oscillator_coordinate(params: PotentialParams, x):
    """``r = sqrt(b) (x + m/b)``."""
    return math.sqrt(params.b) * (np.asarray(x, dtype=float) + params.x0)


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Simpson rule in the oscillator coordinate r."""

    r_min: float = -12.0
    r_max: float = 12.0
    n_points: int = 2401

    def __post_init__(self):
        if self.r_min > -10.0 or self.r_max < 10.0:
            raise ValueError("quadrature must cover at least r in [-10, 10]")
        if self.n_points < 3:
            raise ValueError("quadrature needs at least 3 points")


@dataclass(frozen=True)
class Mode:
    n: int
    sign: int
    energy: float
    params: PotentialParams
    series: CoefficientSeries
    norm_constant: float = 1.0

    @property
    def phase(self) -> int:
        # fixes phi > 0 for r -> +inf
        return 1 if self.series.leading > 0 else -1

    @property
    def amplitude(self) -> float:
        return self.phase * self.norm_constant


def build_mode(n: int, params: PotentialParams, sign: int = +1,
               normalize: bool = True, quad: QuadratureSpec | None = None) -> Mode:
    mode = Mode(n, sign, energy_level(n, params.b, sign), params, hermite_coeffs(n))
    if normalize:
        mode = normalize_mode(mode, quad or QuadratureSpec())
    return mode


def _phi_r(mode, r):
    return mode.amplitude * np.exp(-0.5 * r * r) * eval_F(mode.series, r)


def _phi_prime_r(mode, r):
    # d/dx = sqrt(b) d/dr
    F = eval_F(mode.series, r)
    dF = eval_F_prime(mode.series, r)
    return mode.amplitude * math.sqrt(mode.params.b) * np.exp(-0.5 * r * r) * (dF - r * F)


def _chi_r(mode, r):
    if mode.n == 0:
        return np.zeros(np.shape(r), dtype=complex)
    # m + b x == sqrt(b) r
    w = math.sqrt(mode.params.b) * r
    return (1j / mode.energy) * (_phi_prime_r(mode, r) + w * _phi_r(mode, r))


def phi_value(mode: Mode, x):
    """Upper component ``N exp(-r^2/2) F(r)`` at position(s) x."""
    return _phi_r(mode, to_oscillator_coordinate(mode.params, x))


def phi_prime(mode: Mode, x):
    """Closed-form ``d phi / dx``."""
    return _phi_prime_r(mode, to_oscillator_coordinate(mode.params, x))


def chi_value(mode: Mode, x):
    """Lower component ``(i/E) (phi' + (m + b x) phi)``; identically 0 for n = 0."""
    return _chi_r(mode, to_oscillator_coordinate(mode.params, x))


def normalize_mode(mode: Mode, quad: QuadratureSpec | None = None) -> Mode:
    """Rescale so that the integral of ``|phi|^2 + |chi|^2`` over x is 1."""
    quad = quad or QuadratureSpec()
    r = np.linspace(quad.r_min, quad.r_max, quad.n_points)
    dens = np.abs(_phi_r(mode, r)) ** 2 + np.abs(_chi_r(mode, r)) ** 2
    # dx = dr / sqrt(b)
    norm2 = simpson(dens, x=r) / math.sqrt(mode.params.b)
    if not (math.isfinite(norm2) and norm2 > 0):
        raise ValueError(f"cannot normalize mode n={mode.n}: norm is {norm2!r}")
    return replace(mode, norm_constant=mode.norm_constant / math.sqrt(norm2))


def mode_field(mode: Mode, grid: Grid) -> SpinorField:
    x = grid.x
    return SpinorField(grid, phi_value(mode, x).astype(complex), chi_value(mode, x),
                       meta={"n": mode.n, "sign": mode.sign, "energy": mode.energy})


def real_majorana_field(mode: Mode, t: float, grid: Grid) -> SpinorField:
    """``Re[exp(-i E t) (phi, chi)]`` on the grid.

    The Dirac operator is real in the Majorana representation, so the real
    part of a stationary solution is itself a solution.
    """
    x = grid.x
    rot = np.exp(-1j * mode.energy * t)
    return SpinorField(grid, np.real(rot * phi_value(mode, x)),
                       np.real(rot * chi_value(mode, x)),
                       meta={"n": mode.n, "t": t})
