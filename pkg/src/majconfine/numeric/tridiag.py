"""Symmetric tridiagonal matrices and a Sturm-sequence bisection eigensolver."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np

from .._parallel import ordered_map
from ..core import Grid

_EPS = np.finfo(float).eps
_SAFMIN = sys.float_info.min


@dataclass(frozen=True)
class TridiagonalSym:
    """Real symmetric tridiagonal matrix stored as its two diagonals."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float).ravel()
        e = np.asarray(self.offdiag, dtype=float).ravel()
        if d.size < 1:
            raise ValueError("matrix must have dimension >= 1")
        if e.size != d.size - 1:
            raise ValueError(f"offdiag must have {d.size - 1} entries, got {e.size}")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def dim(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def gershgorin_bounds(self) -> tuple:
        """Interval containing every eigenvalue."""
        e = np.abs(self.offdiag)
        radius = np.zeros(self.dim)
        radius[:-1] += e
        radius[1:] += e
        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))

    def principal(self, size: int) -> "TridiagonalSym":
        """Leading principal submatrix of the given size."""
        return TridiagonalSym(self.diag[:size], self.offdiag[:size - 1])


@dataclass
class EigenResult:
    values: np.ndarray
    grid: Grid | None = None
    iterations: list = field(default_factory=list)
    residual_bound: float = 0.0


class _Sturm:
    """Pre-packed diagonals for repeated Sturm counts."""

    def __init__(self, a: TridiagonalSym):
        self.d0 = float(a.diag[0])
        e2 = a.offdiag ** 2
        self.pairs = list(zip(a.diag[1:].tolist(), e2.tolist()))
        self.pivmin = _SAFMIN * max(1.0, float(e2.max()) if e2.size else 1.0)

    def count(self, lam: float) -> int:
        """Number of eigenvalues below ``lam`` (negative pivots of T - lam I)."""
        pivmin = self.pivmin
        q = self.d0 - lam
        if abs(q) < pivmin:
            q = -pivmin
        n = 1 if q < 0 else 0
        for d, e2 in self.pairs:
            q = d - lam - e2 / q
            if abs(q) < pivmin:
                q = -pivmin
            if q < 0:
                n += 1
        return n


def sturm_count(a: TridiagonalSym, lam: float) -> int:
    return _Sturm(a).count(lam)


def _bisect_index(sturm, j, lo, hi, tol):
    # invariant: count(lo) <= j < count(hi)
    steps = 0
    while hi - lo >= tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm.count(mid) > j:
            hi = mid
        else:
            lo = mid
        steps += 1
    return 0.5 * (lo + hi), 0.5 * (hi - lo), steps


def eigen_lowest_k(a: TridiagonalSym, k: int, tol: float = 1e-12,
                   workers: int | None = None, grid: Grid | None = None) -> EigenResult:
    """The k smallest eigenvalues of ``a`` by Sturm-count bisection.

    Each eigenvalue is bracketed independently from the Gershgorin interval
    and bisected until the bracket is narrower than ``tol`` (or cannot be
    split further in floating point). The searches are independent, so
    running them on several threads returns bit-identical values.
    """
    if int(k) != k or not 1 <= k <= a.dim:
        raise ValueError(f"k must be in [1, {a.dim}], got {k!r}")
    if not tol > 0:
        raise ValueError("tol must be positive")
    lo, hi = a.gershgorin_bounds()
    pad = 2 * _EPS * max(abs(lo), abs(hi), 1.0) * a.dim
    lo, hi = lo - pad, hi + pad
    sturm = _Sturm(a)

    out = ordered_map(lambda j: _bisect_index(sturm, j, lo, hi, tol), range(int(k)), workers)
    values = np.array([v for v, _, _ in out])
    norm = max(abs(lo), abs(hi))
    bound = max(w for _, w, _ in out) + a.dim * _EPS * norm
    return EigenResult(values, grid, [s for _, _, s in out], bound)
