import math

import numpy as np
import pytest
from scipy.optimize import brentq
from scipy.special import j0

import plapbounds.solver as sv
from plapbounds.bounds import eigen_upper_bound
from plapbounds.geometry import ModelSpace
from plapbounds.solver import (
    RadialProfile,
    SolverError,
    dirichlet_eigenvalue,
    equation_residual,
    h_and_G,
    interval_eigenvalue_1d,
    pi_p,
    rayleigh_minimize,
    rayleigh_minimize_interval,
    shoot,
    sigma_ratio,
    sup_gradient,
    synthetic_exponential_profile,
)


@pytest.fixture(scope="module")
def j01_squared():
    """Independent Bessel-zero oracle for the flat unit disk at p = 2."""
    return brentq(j0, 2.0, 3.0) ** 2


def test_pi_p_values():
    assert pi_p(2.0) == pytest.approx(math.pi, rel=1e-15)
    assert pi_p(3.0) == pytest.approx(2.4183991523122903, rel=1e-14)
    assert pi_p(1.5) == pytest.approx(4.8367983046245805, rel=1e-14)


@pytest.mark.parametrize(
    "p,L,expect,tol",
    [
        (2.0, math.pi, 1.0, 1e-8),
        (3.0, pi_p(3.0), 2.0, 1e-6),
        (1.5, pi_p(1.5), 0.5, 1e-6),
        (2.0, 1.0, math.pi**2, 1e-6),
        # off the half-period: generic L against the closed form
        (2.5, 2.0, 1.5 * (pi_p(2.5) / 2.0) ** 2.5, 1e-6),
    ],
)
def test_interval_closed_form(p, L, expect, tol):
    """lambda_1(0, L) = (p-1) (pi_p / L)^p for the unit-weight problem."""
    res = interval_eigenvalue_1d(p, L, tol=tol * expect / 4.0)
    assert res.lam == pytest.approx(expect, rel=tol)
    assert res.bracket[1] - res.bracket[0] <= tol * expect / 4.0
    assert res.bracket[0] <= res.lam <= res.bracket[1]


def test_shoot_constant_at_lam_zero():
    prof, zero = shoot(ModelSpace(2, 1.0), 2.0, 0.0, 10.0)
    assert zero is None
    assert np.allclose(prof.u, 1.0)
    assert np.allclose(prof.v, 0.0)


def test_shoot_flat_disk_zero_location(j01_squared):
    # just above the eigenvalue the first zero sits at the boundary
    _, zero = shoot(ModelSpace(2, 0.0), 2.0, j01_squared * (1 + 1e-6), 1.0)
    assert zero is not None
    assert zero == pytest.approx(1.0, abs=1e-5)
    _, zero = shoot(ModelSpace(2, 0.0), 2.0, j01_squared * (1 - 1e-6), 1.0)
    assert zero is None


def test_shoot_positive_below_spectral_bottom():
    prof, zero = shoot(ModelSpace(2, 1.0), 2.0, 0.2, 50.0)
    assert zero is None
    assert np.all(prof.u > 0)
    assert np.all(np.diff(prof.u) < 0)  # ground-state monotonicity


def test_shoot_validates_arguments():
    with pytest.raises(ValueError):
        shoot(ModelSpace(2, 1.0), 1.0, 0.1, 10.0)
    with pytest.raises(ValueError):
        shoot(ModelSpace(2, 1.0), 2.0, -0.1, 10.0)
    with pytest.raises(ValueError):
        shoot(ModelSpace(2, 1.0), 2.0, 0.1, -10.0)


def test_flat_disk_eigenvalue(j01_squared):
    res = dirichlet_eigenvalue(ModelSpace(2, 0.0), 2.0, 1.0, tol=1e-8)
    assert res.lam == pytest.approx(j01_squared, rel=1e-5)


def test_hyperbolic_ball_eigenvalue_window():
    res = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.0, 40.0, tol=1e-8)
    assert 0.25 < res.lam < 0.258


def test_bisection_bracket_contract():
    res = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.5, 10.0, tol=1e-7)
    lo, hi = res.bracket
    assert hi - lo <= 1e-7
    assert lo <= res.lam <= hi
    # profile is the hi shot: its first zero reaches the boundary
    assert res.profile.r[-1] == pytest.approx(10.0, rel=1e-4)


def test_domain_monotonicity():
    ms = ModelSpace(2, 1.0)
    lams = [dirichlet_eigenvalue(ms, 2.0, R, tol=1e-8).lam for R in (2, 5, 10, 20, 40)]
    assert all(a > b for a, b in zip(lams, lams[1:]))


def test_flat_scaling_law():
    ms = ModelSpace(2, 0.0)
    a = dirichlet_eigenvalue(ms, 2.5, 1.0, tol=1e-10).lam
    b = dirichlet_eigenvalue(ms, 2.5, 2.0, tol=1e-10).lam
    assert b * 2.0**2.5 == pytest.approx(a, rel=1e-6)


def test_first_zero_decreasing_in_lam():
    ms = ModelSpace(2, 1.0)
    lam1 = dirichlet_eigenvalue(ms, 2.0, 10.0, tol=1e-8).lam
    zeros = []
    for lam in np.linspace(1.05 * lam1, 3.0 * lam1, 10):
        _, zero = shoot(ms, 2.0, lam, 10.0)
        assert zero is not None
        zeros.append(zero)
    assert all(a > b for a, b in zip(zeros, zeros[1:]))


def test_startup_radius_insensitivity():
    ms = ModelSpace(2, 1.0)
    lam_a = dirichlet_eigenvalue(ms, 2.5, 10.0, tol=1e-10).lam
    old = sv._STARTUP_FRACTION
    try:
        sv._STARTUP_FRACTION = old / 2.0
        lam_b = dirichlet_eigenvalue(ms, 2.5, 10.0, tol=1e-10).lam
    finally:
        sv._STARTUP_FRACTION = old
    assert lam_b == pytest.approx(lam_a, rel=1e-8)


def test_rayleigh_flat_disk(j01_squared):
    res = rayleigh_minimize(ModelSpace(2, 0.0), 2.0, 1.0, mesh_size=4000)
    assert res.lam == pytest.approx(j01_squared, rel=1e-3)


def test_rayleigh_interval_p3():
    res = rayleigh_minimize_interval(3.0, pi_p(3.0), mesh_size=10000)
    assert res.lam == pytest.approx(2.0, rel=1e-3)


def test_rayleigh_agrees_with_shooting():
    ms = ModelSpace(3, 1.0)
    ra = rayleigh_minimize(ms, 2.5, 10.0, mesh_size=4000)
    rs = dirichlet_eigenvalue(ms, 2.5, 10.0, tol=1e-9)
    assert ra.lam == pytest.approx(rs.lam, rel=1e-3)


def test_rayleigh_rejects_small_mesh():
    with pytest.raises(ValueError):
        rayleigh_minimize(ModelSpace(2, 0.0), 2.0, 1.0, mesh_size=50)


def test_eigenvalues_exceed_closed_form_bound():
    for n in (2, 3):
        for p in (1.5, 2.0, 2.5, 3.0):
            lam = dirichlet_eigenvalue(ModelSpace(n, 1.0), p, 10.0, tol=1e-8).lam
            assert lam > eigen_upper_bound(n, p, 1.0)


def test_h_and_G_trivial_and_synthetic():
    prof, _ = shoot(ModelSpace(2, 1.0), 2.0, 0.0, 5.0)
    h, G = h_and_G(prof)
    assert np.allclose(h, 0.0)
    assert np.allclose(G, 0.0)
    n, p, K = 3, 2.5, 1.0
    synth = synthetic_exponential_profile(n, p, K, 0.5, 30.0)
    _, G = h_and_G(synth)
    level = ((p - 1) * (n - 1) * K / p) ** p
    assert np.max(np.abs(G - level)) <= 1e-12 * level


def test_equation_residual_contracts():
    prof, _ = shoot(ModelSpace(2, 1.0), 2.0, 0.0, 5.0)
    # constants are p-harmonic at lam = 0: u' = 0 is rejected by the pre
    with pytest.raises(ValueError):
        equation_residual(prof)
    res = dirichlet_eigenvalue(ModelSpace(2, 1.0), 2.0, 10.0, tol=1e-9)
    span = res.profile.r[-1] - res.profile.r[0]
    val = equation_residual(
        res.profile, res.profile.r[0] + 0.1 * span, res.profile.r[0] + 0.9 * span
    )
    scale = res.lam  # (p-1)^(p-1) = 1 at p = 2
    assert val <= 1e-4 * scale


@pytest.mark.parametrize("n,p,R", [(2, 2.5, 10.0), (3, 1.5, 10.0), (3, 3.0, 20.0)])
def test_eigenprofile_residual_gate(n, p, R):
    """Converged eigenprofiles satisfy the log-substituted equation to
    1e-4 of the lam-term scale on the interior window."""
    res = dirichlet_eigenvalue(ModelSpace(n, 1.0), p, R, tol=1e-9)
    scale = (p - 1.0) ** (p - 1.0) * res.lam
    assert res.residual <= 1e-4 * scale


def test_synthetic_profile_asymptotic_residual():
    # the defect of the exponential profile decays with coth(Kr) - 1
    prof = synthetic_exponential_profile(3, 3.0, 1.0, 19.5, 20.5, num=20001)
    assert equation_residual(prof, 19.6, 20.4) <= 1e-8


def test_sigma_ratio_conventions():
    prof, _ = shoot(ModelSpace(2, 1.0), 2.0, 0.0, 10.0)
    assert sigma_ratio(prof) == 1.0  # constant solution convention
    synth = synthetic_exponential_profile(3, 2.5, 1.0, 0.5, 40.0)
    assert sigma_ratio(synth) == pytest.approx(1.0, abs=1e-12)
    prof, _ = shoot(ModelSpace(2, 1.0), 2.0, 0.2, 50.0)
    sig = sigma_ratio(prof)
    assert 0.0 < sig <= 1.0


def test_sup_gradient():
    prof, _ = shoot(ModelSpace(2, 1.0), 2.0, 0.0, 10.0)
    assert sup_gradient(prof, 0.5) == 0.0
    n, p, K = 2, 3.0, 1.0
    synth = synthetic_exponential_profile(n, p, K, 0.5, 40.0)
    level = ((p - 1) * (n - 1) * K / p) ** p
    assert sup_gradient(synth, 0.5) == pytest.approx(level, rel=1e-12)
    with pytest.raises(ValueError):
        sup_gradient(synth, 1.5)


def test_profile_validation():
    r = np.linspace(0.1, 1.0, 10)
    with pytest.raises(ValueError):
        RadialProfile(r, np.ones(9), np.zeros(10), 2, 2.0, 1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        RadialProfile(r[::-1], np.ones(10), np.zeros(10), 2, 2.0, 1.0, 0.0, 1.0)


def test_bracketing_failure_reported():
    # an interval that cannot contain a zero within the doubling cap
    with pytest.raises(SolverError):
        sv._bisect_eigenvalue(lambda lam: None, 1.0, 10.0, 1e-6)
