"""Shared value types: potential parameters, uniform grids and sampled spinors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

#: minimum half-width of a grid, in oscillator units r = sqrt(b) (x + x0)
SUPPORT_RADIUS = 8.0


@dataclass(frozen=True)
class PotentialParams:
    """Mass ``m`` and slope ``b`` of the scalar potential ``m + b x``.

    The mass only enters the bound states through the origin shift
    ``x0 = m / b``.
    """

    m: float
    b: float

    def __post_init__(self):
        if not math.isfinite(self.m):
            raise ValueError("m must be finite")
        if not (math.isfinite(self.b) and self.b > 0):
            raise ValueError("b must be positive")

    @property
    def x0(self) -> float:
        return self.m / self.b


@dataclass(frozen=True)
class Grid:
    """Uniform grid of ``n_points`` nodes on ``[x_min, x_max]``."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 3:
            raise ValueError("n_points must be an integer >= 3")
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("grid bounds must be finite")
        if not self.x_min < self.x_max:
            raise ValueError("x_min must be smaller than x_max")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @classmethod
    def centered(cls, params: PotentialParams, half_width: float = 10.0,
                 n_points: int = 4001) -> "Grid":
        """Grid centred on the potential minimum ``x = -x0``.

        ``half_width`` is measured in oscillator units, so the physical
        half-width is ``half_width / sqrt(b)``.
        """
        c = -params.x0
        w = half_width / math.sqrt(params.b)
        return cls(c - w, c + w, n_points)

    @classmethod
    def parse(cls, spec: str) -> "Grid":
        """Parse ``"min:max:points"``."""
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid spec must be 'min:max:points', got {spec!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ValueError(f"bad grid spec {spec!r}: {exc}") from None

    def covers(self, params: PotentialParams, radius: float = SUPPORT_RADIUS) -> bool:
        c = -params.x0
        w = radius / math.sqrt(params.b)
        return self.x_min <= c - w and self.x_max >= c + w

    def check_support(self, params: PotentialParams,
                      radius: float = SUPPORT_RADIUS) -> None:
        if not self.covers(params, radius):
            c = -params.x0
            w = radius / math.sqrt(params.b)
            raise ValueError(
                f"grid [{self.x_min:g}, {self.x_max:g}] does not contain the "
                f"Gaussian support [{c - w:g}, {c + w:g}] (R = {radius:g})"
            )


@dataclass
class SpinorField:
    """Two-component field sampled on a uniform grid."""

    grid: Grid
    phi: np.ndarray
    chi: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.phi = np.asarray(self.phi)
        self.chi = np.asarray(self.chi)
        n = self.grid.n_points
        if self.phi.shape != (n,) or self.chi.shape != (n,):
            raise ValueError(
                f"field components must have shape ({n},), got "
                f"{self.phi.shape} and {self.chi.shape}"
            )

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.phi) ** 2 + np.abs(self.chi) ** 2


def count_sign_changes(values, deadband: float = 1e-12) -> int:
    """Strict sign changes of a real sequence.

    Samples with ``|v| <= deadband * max|v|`` are treated as zero and skipped.
    """
    v = np.asarray(values, dtype=float)
    scale = np.max(np.abs(v)) if v.size else 0.0
    if scale == 0.0:
        return 0
    s = np.sign(v[np.abs(v) > deadband * scale])
    return int(np.count_nonzero(s[1:] != s[:-1]))
