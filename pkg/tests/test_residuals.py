import math

import numpy as np
import pytest

from majconfine.analytic import build_mode, mode_field
from majconfine.core import Grid, PotentialParams, SpinorField
from majconfine.numeric import (
    quadrature_norm,
    residual_coupled,
    residual_coupled_parts,
    residual_time_domain,
)
from majconfine.numeric.residuals import residual_time_domain_samples

P0 = PotentialParams(0.0, 1.0)


def _field(grid, phi, chi=None):
    chi = np.zeros_like(phi) if chi is None else chi
    return SpinorField(grid, phi, chi)


def test_constant_field_unit_interval():
    g = Grid(0.0, 1.0, 101)
    assert quadrature_norm(_field(g, np.ones(101))) == pytest.approx(1.0, abs=1e-15)


def test_ground_mode_normalized():
    g = Grid(-10, 10, 2001)
    assert quadrature_norm(mode_field(build_mode(0, P0), g)) == pytest.approx(1.0, abs=1e-8)


def test_simpson_fourth_order():
    # coarse grids, so the error sits above rounding; integral of e^{-2x^2}
    exact = math.sqrt(math.pi / 2)
    errs = []
    for n in (21, 41, 81):
        g = Grid(-10, 10, n)
        errs.append(abs(quadrature_norm(_field(g, np.exp(-g.x ** 2))) - exact))
    assert errs[0] / errs[1] >= 16
    assert errs[1] / errs[2] >= 16


def test_even_point_count_uses_trapezoid():
    g = Grid(0.0, 1.0, 4)
    phi = g.x.copy()
    # trapezoid of x^2 on 3 panels
    expected = g.h * (0 + 2 * (g.x[1] ** 2 + g.x[2] ** 2) + 1) / 2
    assert quadrature_norm(_field(g, phi)) == pytest.approx(expected, abs=1e-15)


def test_quadrature_includes_chi():
    g = Grid(0.0, 1.0, 11)
    f = SpinorField(g, np.ones(11), 1j * np.ones(11))
    assert quadrature_norm(f) == pytest.approx(2.0)


def test_too_few_points():
    with pytest.raises(ValueError):
        Grid(0.0, 1.0, 2)

    class TwoPoints:
        grid = type("G", (), {"n_points": 2})()

    with pytest.raises(ValueError, match="at least 3"):
        quadrature_norm(TwoPoints())


def test_coupled_residual_n2_shifted():
    p = PotentialParams(1.0, 1.0)
    g = Grid(-9.0, 7.0, 4001)
    mode = build_mode(2, p)
    assert residual_coupled(mode_field(mode, g), mode.energy, p) < 1e-6


def test_coupled_residual_negative_energy_branch():
    p = PotentialParams(1.0, 1.0)
    g = Grid(-9.0, 7.0, 4001)
    mode = build_mode(2, p, sign=-1)
    assert residual_coupled(mode_field(mode, g), mode.energy, p) < 1e-6


def test_wrong_spinor_has_order_one_residual():
    p = PotentialParams(1.0, 1.0)
    g = Grid(-9.0, 7.0, 4001)
    mode = build_mode(2, p)
    f = mode_field(mode, g)
    bad = SpinorField(g, f.phi, np.zeros_like(f.phi))
    assert residual_coupled(bad, mode.energy, p) > 0.1


def test_zero_mode_residuals():
    g = Grid(-10, 10, 4001)
    mode = build_mode(0, P0)
    f = mode_field(mode, g)
    assert np.all(f.chi == 0)
    r1, r2 = residual_coupled_parts(f, mode.energy, P0)
    assert r1.max() < 1e-6 and r2.max() < 1e-6


def test_coupled_residual_fourth_order():
    p = PotentialParams(0.0, 1.0)
    mode = build_mode(3, p)
    r = [residual_coupled(mode_field(mode, Grid(-10, 10, n)), mode.energy, p)
         for n in (401, 801)]
    assert 14 < r[0] / r[1] < 18


def test_coupled_residual_needs_five_points():
    g = Grid(0, 1, 4)
    with pytest.raises(ValueError):
        residual_coupled(_field(g, np.ones(4)), 0.0, P0)


def _phi3_bound(b, h):
    # central difference error h^2/6 |phi'''| for the Gaussian ground state
    r = np.linspace(-6, 6, 200001)
    n0 = (b / math.pi) ** 0.25
    return h ** 2 / 6 * n0 * b ** 1.5 * np.max(np.abs((3 * r - r ** 3) * np.exp(-r ** 2 / 2)))


def test_static_mode_residual_is_spatial_only():
    mode = build_mode(0, P0)
    g = Grid(-6.0, 6.0, 2001)
    full = residual_time_domain(mode, 5, 1e-3, g)
    f = mode_field(mode, g)
    d = (f.phi[2:] - f.phi[:-2]) / (2 * g.h)
    spatial = np.max(np.abs(d + g.x[1:-1] * f.phi[1:-1]))
    assert full == pytest.approx(spatial, rel=1e-12)
    assert full < 1e-5


def test_static_mode_residual_tracks_truncation_bound():
    mode = build_mode(0, P0)
    g = Grid(-10.0, 10.0, 2001)
    full = residual_time_domain(mode, 3, 1e-3, g)
    assert full == pytest.approx(_phi3_bound(1.0, g.h), rel=1e-3)


def test_time_domain_n1():
    mode = build_mode(1, P0)
    assert residual_time_domain(mode, 100, 1e-3, Grid(-10, 10, 2001)) < 1e-4


def test_time_domain_second_order():
    mode = build_mode(1, P0)
    coarse = residual_time_domain(mode, 100, 2e-3, Grid(-10, 10, 1001))
    fine = residual_time_domain(mode, 200, 1e-3, Grid(-10, 10, 2001))
    order = math.log2(coarse / fine)
    assert 1.8 <= order <= 2.2


def test_time_domain_detects_wrong_sign_of_time():
    mode = build_mode(1, P0)
    g = Grid(-10, 10, 401)
    from majconfine.analytic import real_majorana_field
    fs = [real_majorana_field(mode, -j * 1e-2, g) for j in range(5)]
    u = np.array([f.phi for f in fs])
    v = np.array([f.chi for f in fs])
    assert residual_time_domain_samples(u, v, g.x, 1e-2, P0) > 0.1


def test_time_domain_argument_checks():
    mode = build_mode(1, P0)
    with pytest.raises(ValueError):
        residual_time_domain(mode, 2, 1e-3, Grid(-10, 10, 101))
    with pytest.raises(ValueError):
        residual_time_domain(mode, 5, 0.0, Grid(-10, 10, 101))
