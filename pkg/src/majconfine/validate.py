"""Cross-validation harness: each physical claim becomes a named, runnable check.

Every check returns a :class:`ValidationReport` whose status is ``"pass"``
exactly when its deviation does not exceed its tolerance. Checks split in two
kinds: *algebraic* checks compare quantities that agree exactly or up to
rounding (gamma-matrix identities, series termination, sign flips of the
energy, translated copies of the same FD matrix) and ignore the global
tolerance override, while *numerical* checks carry quadrature or
discretization error and use it.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass

import numpy as np
from scipy.integrate import simpson

from . import algebra, analytic
from ._parallel import ordered_map
from .core import Grid, PotentialParams
from .numeric import (
    find_eigen_shooting,
    residual_coupled,
    residual_time_domain,
    spectrum_fd,
)

PASS, FAIL = "pass", "fail"


@dataclass
class ValidationReport:
    check_name: str
    status: str
    observed: object
    expected: object
    tolerance: float
    runtime: float
    deviation: float = 0.0
    kind: str = "numerical"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, include_runtime: bool = True) -> dict:
        d = asdict(self)
        if not include_runtime:
            d.pop("runtime")
        return _jsonable(d)

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), sort_keys=True)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else repr(v)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def _report(name, deviation, tol, observed, expected, t0, kind="numerical", detail=""):
    deviation = float(deviation)
    ok = math.isfinite(deviation) and deviation <= tol
    return ValidationReport(name, PASS if ok else FAIL, observed, expected, tol,
                            time.perf_counter() - t0, deviation, kind, detail)


def _default_grid(params, n_points=4001):
    return Grid.centered(params, 10.0, n_points)


# ---------------------------------------------------------------------------
# claim checks


def check_spectrum_agreement(params: PotentialParams, n_max: int, tol: float,
                             grid: Grid | None = None,
                             shooting_tol: float = 1e-10) -> ValidationReport:
    """Closed-form energies against the FD and shooting spectra, n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    t0 = time.perf_counter()
    grid = grid or _default_grid(params)
    expected = [analytic.energy_level(n, params.b) for n in range(n_max + 1)]
    fd = spectrum_fd(params, grid, n_max + 1)
    shots = [find_eigen_shooting(params, n, shooting_tol) for n in range(n_max + 1)]
    shoot_e = [s.energy(params.b) for s in shots]
    dev = max(np.max(np.abs(fd - expected)), np.max(np.abs(np.subtract(shoot_e, expected))))
    observed = {"fd": fd.tolist(), "shooting": shoot_e,
                "shooting_beta_over_b": [s.beta_over_b for s in shots]}
    return _report("spectrum_agreement", dev, tol, observed, expected, t0)


def check_no_gap(params: PotentialParams, n_max: int = 20) -> ValidationReport:
    """``E_n^+ + E_n^- = 0`` for every n and ``E_0 = 0``."""
    t0 = time.perf_counter()
    sums = [analytic.energy_level(n, params.b, +1) + analytic.energy_level(n, params.b, -1)
            for n in range(n_max + 1)]
    e0 = analytic.energy_level(0, params.b)
    dev = max(max(abs(s) for s in sums), abs(e0))
    return _report("no_gap", dev, 0.0, {"max_pair_sum": max(abs(s) for s in sums), "E0": e0},
                   {"max_pair_sum": 0.0, "E0": 0.0}, t0, kind="algebraic")


def check_unequal_spacing(b: float, n_max: int = 50, energies=None,
                          tol: float = 1e-12) -> ValidationReport:
    """Spacings strictly decrease and follow ``sqrt(2(n+1)b) - sqrt(2nb)``.

    ``energies`` replaces the computed levels (to feed in a counter-example).
    The deviation is the larger of the formula mismatch and the number of
    consecutive spacing pairs that fail to decrease, so any such pair fails
    the check at every tolerance below 1.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    t0 = time.perf_counter()
    if energies is None:
        energies = [analytic.energy_level(n, b) for n in range(n_max + 2)]
    energies = np.asarray(energies, dtype=float)
    spacings = np.diff(energies)
    k = spacings.size
    expected = np.array([analytic.level_spacing(n, b) for n in range(k)])
    formula_err = float(np.max(np.abs(spacings - expected)))
    violations = int(np.count_nonzero(spacings[1:] >= spacings[:-1]))
    dev = max(formula_err, float(violations))
    return _report("unequal_spacing", dev, tol, spacings.tolist(), expected.tolist(), t0,
                   kind="algebraic",
                   detail=f"non-decreasing pairs: {violations}; formula error {formula_err:.3e}")


def check_mass_absence(params: PotentialParams, tol: float = 1e-10, other_m: float | None = None,
                       n_max: int = 6, n_points: int = 4001) -> ValidationReport:
    """Spectrum independent of m: bit-identical closed form, FD within ``tol``.

    The FD grids are centred on each potential minimum, i.e. translated by
    the difference of the origin shifts.
    """
    t0 = time.perf_counter()
    if other_m is None:
        other_m = 0.0 if params.m != 0 else 3.0
    other = PotentialParams(other_m, params.b)
    ana_a = [analytic.energy_level(n, params.b) for n in range(n_max + 1)]
    ana_b = [analytic.energy_level(n, other.b) for n in range(n_max + 1)]
    identical = ana_a == ana_b
    fd_a = spectrum_fd(params, _default_grid(params, n_points), n_max + 1)
    fd_b = spectrum_fd(other, _default_grid(other, n_points), n_max + 1)
    dev_fd = float(np.max(np.abs(fd_a - fd_b)))
    dev = dev_fd if identical else math.inf
    return _report("mass_absence", dev, tol,
                   {"m": params.m, "fd": fd_a.tolist(), "analytic_identical": identical},
                   {"m": other_m, "fd": fd_b.tolist()}, t0, kind="algebraic")


def check_mass_translation(m: float, b: float, tol: float = 1e-10,
                           n_max: int = 4) -> ValidationReport:
    """phi with mass m equals the massless phi translated by ``x0 = m/b``."""
    t0 = time.perf_counter()
    p = PotentialParams(m, b)
    p0 = PotentialParams(0.0, b)
    x = _default_grid(p).x
    devs = []
    for n in range(n_max + 1):
        a = analytic.phi_value(analytic.build_mode(n, p), x)
        c = analytic.phi_value(analytic.build_mode(n, p0), x + p.x0)
        devs.append(float(np.max(np.abs(a - c))))
    return _report("mass_translation", max(devs), tol, devs, [0.0] * len(devs), t0,
                   kind="algebraic", detail=f"x0 = {p.x0:g}")


def gram_matrix(modes, grid: Grid) -> np.ndarray:
    x = grid.x
    phis = [analytic.phi_value(md, x).astype(complex) for md in modes]
    chis = [analytic.chi_value(md, x) for md in modes]
    k = len(modes)
    g = np.empty((k, k), dtype=complex)
    for i in range(k):
        for j in range(k):
            g[i, j] = simpson(np.conj(phis[i]) * phis[j] + np.conj(chis[i]) * chis[j], x=x)
    return g


def check_orthonormality(params: PotentialParams, n_max: int, tol: float,
                         modes=None, grid: Grid | None = None) -> ValidationReport:
    """Gram matrix of normalized modes (positive branch unless given) vs identity."""
    t0 = time.perf_counter()
    grid = grid or _default_grid(params)
    if modes is None:
        modes = [analytic.build_mode(n, params) for n in range(n_max + 1)]
    g = gram_matrix(modes, grid)
    dev = float(np.max(np.abs(g - np.eye(len(modes)))))
    return _report("orthonormality", dev, tol, {"gram_size": len(modes)},
                   {"gram": "identity"}, t0, detail=f"max |G - I| = {dev:.3e}")


def susy_overlap(params: PotentialParams, n: int, grid: Grid | None = None) -> float:
    """``|<chi_n, phi_{n-1}>| / (|chi_n| |phi_{n-1}|)``."""
    if n < 1:
        raise ValueError("n must be >= 1: chi vanishes for the zero mode")
    grid = grid or _default_grid(params)
    x = grid.x
    chi = analytic.chi_value(analytic.build_mode(n, params), x)
    phi = analytic.phi_value(analytic.build_mode(n - 1, params), x)
    inner = simpson(np.conj(chi) * phi, x=x)
    nc = simpson(np.abs(chi) ** 2, x=x)
    nphi = simpson(phi ** 2, x=x)
    return float(abs(inner) / math.sqrt(nc * nphi))


def check_susy_partner(params: PotentialParams, n: int, tol: float,
                       grid: Grid | None = None) -> ValidationReport:
    """Normalized ``|chi_n|`` has the shape of ``phi_{n-1}``."""
    if n < 1:
        raise ValueError("n must be >= 1: chi vanishes for the zero mode")
    t0 = time.perf_counter()
    ov = susy_overlap(params, n, grid)
    return _report("susy_partner", abs(1.0 - ov), tol, ov, 1.0, t0, detail=f"n = {n}")


def check_susy_partners(params: PotentialParams, n_max: int, tol: float) -> ValidationReport:
    t0 = time.perf_counter()
    grid = _default_grid(params)
    ovs = [susy_overlap(params, n, grid) for n in range(1, n_max + 1)]
    dev = max(abs(1.0 - o) for o in ovs)
    return _report("susy_partner", dev, tol, ovs, [1.0] * len(ovs), t0,
                   detail=f"n = 1..{n_max}")


def check_series_termination(n_max: int = 50) -> ValidationReport:
    t0 = time.perf_counter()
    tails = [analytic.hermite_coeffs(n).termination_coefficient() for n in range(n_max + 1)]
    nonzero = sum(1 for a in tails if a != 0)
    return _report("series_termination", float(nonzero), 0.0, nonzero, 0, t0,
                   kind="algebraic", detail=f"a_(n+2) exactly zero for n <= {n_max}")


def check_clifford_algebra(tol: float = algebra.DEFAULT_TOL) -> ValidationReport:
    t0 = time.perf_counter()
    rep = algebra.check_clifford(algebra.build_gamma_majorana(), tol)
    return _report("clifford_algebra", rep.max_deviation, tol,
                   {f"{mu}{nu}": d for (mu, nu), d in rep.deviations.items()}, 0.0, t0,
                   kind="algebraic")


def check_majorana_reality_report(tol: float = algebra.DEFAULT_TOL) -> ValidationReport:
    t0 = time.perf_counter()
    rep = algebra.check_majorana_reality(algebra.build_gamma_majorana(), tol)
    return _report("majorana_reality", rep.max_deviation, tol,
                   {"reality": rep.reality, "adjoint": rep.hermiticity}, 0.0, t0,
                   kind="algebraic")


def check_zero_mode(params: PotentialParams, tol: float, n_points: int = 4001) -> ValidationReport:
    """``E_0 = 0``, ``chi_0 = 0`` and the coupled residual of the zero mode."""
    t0 = time.perf_counter()
    grid = _default_grid(params, n_points)
    mode = analytic.build_mode(0, params)
    field = analytic.mode_field(mode, grid)
    chi_max = float(np.max(np.abs(field.chi)))
    res = residual_coupled(field, mode.energy, params)
    exact_ok = mode.energy == 0.0 and chi_max == 0.0
    dev = res if exact_ok else math.inf
    return _report("zero_mode", dev, tol, {"E0": mode.energy, "max_chi": chi_max, "residual": res},
                   {"E0": 0.0, "max_chi": 0.0}, t0)


def check_coupled_residual(params: PotentialParams, n_max: int, tol: float,
                           n_points: int = 4001) -> ValidationReport:
    """Both first-order equations hold for every mode and both energy signs."""
    t0 = time.perf_counter()
    grid = _default_grid(params, n_points)
    res = []
    for n in range(n_max + 1):
        for sign in (1, -1):
            mode = analytic.build_mode(n, params, sign)
            res.append(residual_coupled(analytic.mode_field(mode, grid), mode.energy, params))
    return _report("coupled_residual", max(res), tol, res, 0.0, t0,
                   detail=f"n = 0..{n_max}, both signs, 4th-order differences")


def check_time_domain(params: PotentialParams, tol: float, n: int = 1, t_steps: int = 100,
                      dt: float = 1e-3, n_points: int = 2001) -> ValidationReport:
    """Real Majorana field satisfies the time-dependent equation; reports convergence order."""
    t0 = time.perf_counter()
    mode = analytic.build_mode(n, params)
    g1 = _default_grid(params, n_points)
    g2 = _default_grid(params, 2 * n_points - 1)
    r1 = residual_time_domain(mode, t_steps, dt, g1)
    r2 = residual_time_domain(mode, 2 * t_steps - 1, dt / 2, g2)
    order = math.log2(r1 / r2) if r2 > 0 else math.inf
    return _report("time_domain_residual", r1, tol, {"residual": r1, "halved": r2, "order": order},
                   {"order": 2.0}, t0)


# ---------------------------------------------------------------------------
# registry

CHECK_NAMES = (
    "clifford_algebra",
    "majorana_reality",
    "series_termination",
    "spectrum_agreement",
    "no_gap",
    "unequal_spacing",
    "mass_absence",
    "mass_translation",
    "orthonormality",
    "susy_partner",
    "zero_mode",
    "coupled_residual",
    "time_domain_residual",
)

ALGEBRAIC_CHECKS = frozenset({
    "clifford_algebra", "majorana_reality", "series_termination",
    "no_gap", "unequal_spacing", "mass_absence", "mass_translation",
})

#: each physical claim and the single check that tests it
CLAIM_CHECKS = {
    "spectrum formula E_n = +/- sqrt(2 n b)": "spectrum_agreement",
    "no gap between positive and negative levels": "no_gap",
    "null ground-state energy": "no_gap",
    "levels not equally spaced": "unequal_spacing",
    "mass absent from the spectrum": "mass_absence",
    "mass shifts the x-origin by m/b": "mass_translation",
}


@dataclass
class ValidateConfig:
    n_max: int = 6
    #: overrides every numerical tolerance when set
    tol: float | None = None
    spectrum_tol: float = 5e-4
    mass_tol: float = 1e-10
    translation_tol: float = 1e-10
    ortho_tol: float = 1e-8
    susy_tol: float = 1e-8
    residual_tol: float = 1e-6
    time_domain_tol: float = 1e-4
    spacing_n_max: int = 50
    n_points: int = 4001
    workers: int | None = None

    def numerical(self, value):
        return value if self.tol is None else self.tol


def _plan(params, cfg):
    num = cfg.numerical
    n_res = min(cfg.n_max, 5)
    grid = _default_grid(params, cfg.n_points)
    return {
        "clifford_algebra": lambda: check_clifford_algebra(),
        "majorana_reality": lambda: check_majorana_reality_report(),
        "series_termination": lambda: check_series_termination(cfg.spacing_n_max),
        "spectrum_agreement": lambda: check_spectrum_agreement(
            params, cfg.n_max, num(cfg.spectrum_tol), grid),
        "no_gap": lambda: check_no_gap(params, cfg.spacing_n_max),
        "unequal_spacing": lambda: check_unequal_spacing(params.b, cfg.spacing_n_max),
        "mass_absence": lambda: check_mass_absence(
            params, cfg.mass_tol, n_max=cfg.n_max, n_points=cfg.n_points),
        "mass_translation": lambda: check_mass_translation(
            params.m, params.b, cfg.translation_tol),
        "orthonormality": lambda: check_orthonormality(
            params, cfg.n_max, num(cfg.ortho_tol), grid=grid),
        "susy_partner": lambda: check_susy_partners(params, cfg.n_max, num(cfg.susy_tol)),
        "zero_mode": lambda: check_zero_mode(params, num(cfg.residual_tol), cfg.n_points),
        "coupled_residual": lambda: check_coupled_residual(
            params, n_res, num(cfg.residual_tol), cfg.n_points),
        "time_domain_residual": lambda: check_time_domain(params, num(cfg.time_domain_tol)),
    }


def run_all(params: PotentialParams, config: ValidateConfig | None = None) -> list:
    """Run every registered check; reports come back in ``CHECK_NAMES`` order."""
    if not isinstance(params, PotentialParams):
        params = PotentialParams(*params)
    cfg = config or ValidateConfig()
    if cfg.n_max < 2:
        raise ValueError("n_max must be >= 2")
    if cfg.tol is not None and cfg.tol < 0:
        raise ValueError("tol must be non-negative")
    plan = _plan(params, cfg)
    return ordered_map(lambda name: plan[name](), CHECK_NAMES, cfg.workers)


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def to_json_lines(reports, include_runtime: bool = True) -> str:
    return "".join(r.to_json(include_runtime) + "\n" for r in reports)


def format_table(reports) -> str:
    rows = [("check", "kind", "status", "deviation", "tolerance", "time[s]")]
    for r in reports:
        rows.append((r.check_name, r.kind, r.status.upper(), f"{r.deviation:.3e}",
                     f"{r.tolerance:.1e}", f"{r.runtime:.2f}"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"

