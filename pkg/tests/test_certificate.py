import math

import mpmath
import pytest

from plapbounds.bounds import SpectralInput, eigen_upper_bound, grad_bound_subcritical
from plapbounds.certificate import (
    CertificateError,
    FiniteRContext,
    abc_supercritical,
    abcd_subcritical,
    cutoff_D,
    cutoff_Dbar,
    eps3_admissible_sup,
    eps3_star_subcritical,
    eps3_star_supercritical,
    finite_R_bound_subcritical,
    finite_R_bound_supercritical,
    golden_section_min,
    minimize_lambda_cap_subcritical,
    minimize_lambda_cap_supercritical,
    quadratic_upper_root,
)

GRID_N = (2, 3, 5)
GRID_K = (0.5, 1.0, 2.0)
SUPER_P = (2.5, 3.0, 4.0)
SUB_P = (1.2, 1.5, 1.8)


def test_quadratic_upper_root():
    assert quadratic_upper_root(1.0, -2.0, 1.0) == pytest.approx(1.0)
    assert quadratic_upper_root(1.0, 0.0, -4.0) == pytest.approx(2.0)
    # factorisation oracle: 2x^2 - 3x - 2 = (2x + 1)(x - 2)
    assert quadratic_upper_root(2.0, -3.0, -2.0) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        quadratic_upper_root(-1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        quadratic_upper_root(1.0, 0.0, 1.0)


def test_abc_supercritical_worked_example():
    cert = abc_supercritical(3, 3.0, 1.0, 3.375)
    assert cert.A == pytest.approx(12.0, rel=1e-15)
    assert cert.B == pytest.approx(16.0 / 3.0, rel=1e-14)
    assert cert.C == pytest.approx(9.0, rel=1e-14)
    assert cert.lambda_cap == pytest.approx(8.0 / 27.0, rel=1e-14)
    # non-optimal eps3 gives a strictly larger cap
    assert abc_supercritical(3, 3.0, 1.0, 2.0).lambda_cap > 8.0 / 27.0


def test_eps3_star_supercritical_inside_range():
    assert eps3_star_supercritical(3, 3.0) == pytest.approx(3.375, rel=1e-15)
    assert eps3_admissible_sup(3, 3.0) == pytest.approx(4.5, rel=1e-15)
    for n in GRID_N:
        for p in SUPER_P:
            star = eps3_star_supercritical(n, p)
            assert 0.0 < star < eps3_admissible_sup(n, p)


@pytest.mark.parametrize("n", GRID_N)
@pytest.mark.parametrize("p", SUPER_P)
def test_identity_A2_minus_4C(n, p):
    for eps3 in (0.5 * eps3_star_supercritical(n, p), eps3_star_supercritical(n, p)):
        cert = abc_supercritical(n, p, 1.0, eps3)
        rhs = 4.0 * (p - 1) ** (2 * (p - 1)) * (p - 2) * eps3 / (n - 1)
        assert cert.A**2 - 4 * cert.C == pytest.approx(rhs, rel=1e-12)


@pytest.mark.parametrize("n", GRID_N)
@pytest.mark.parametrize("p", SUB_P)
def test_identity_At2_minus_4Ct_zero(n, p):
    cert = abcd_subcritical(n, p, 1.0, 1.3)
    assert abs(cert.At**2 - 4 * cert.Ct) <= 1e-12 * cert.At**2


def test_eps3_star_subcritical_value_and_relationship():
    """Oracle: 50-digit evaluation; at (3, 1.5, 1) the optimum is
    exactly sqrt(2)."""
    mpmath.mp.dps = 50
    star = eps3_star_subcritical(3, 1.5, 1.0)
    assert star == pytest.approx(math.sqrt(2.0), rel=1e-14)
    for n in GRID_N:
        for p in SUB_P:
            for K in GRID_K:
                star = eps3_star_subcritical(n, p, K)
                np_, pp, Kp = mpmath.mpf(n), mpmath.mpf(p), mpmath.mpf(K)
                expect = ((np_ - 1) * (pp - 1) ** 2 / pp**3) ** ((2 - pp) / 2) * (
                    pp * (np_ - 1) * Kp**2
                ) ** (pp * (2 - pp) / (2 * (pp - 1)))
                assert star == pytest.approx(float(expect), rel=1e-13)
                cert = abcd_subcritical(n, p, K, star)
                lhs = 4.0 * p / (n - 1) * star ** (2 * (p - 1) / (2 - p))
                assert lhs == pytest.approx(cert.Bt**2, rel=1e-10)


def test_subcritical_cap_at_star():
    cert = abcd_subcritical(3, 1.5, 1.0, eps3_star_subcritical(3, 1.5, 1.0))
    assert cert.lambda_cap == pytest.approx((4.0 / 3.0) ** 1.5, rel=1e-14)
    worse = abcd_subcritical(3, 1.5, 1.0, 2.0 * eps3_star_subcritical(3, 1.5, 1.0))
    assert worse.lambda_cap > (4.0 / 3.0) ** 1.5


def test_subcritical_rejects_flat():
    with pytest.raises(CertificateError):
        eps3_star_subcritical(3, 1.5, 0.0)


@pytest.mark.parametrize("n", GRID_N)
@pytest.mark.parametrize("p", SUPER_P)
@pytest.mark.parametrize("K", GRID_K)
def test_eps3_optimality_supercritical(n, p, K):
    """Numerical minimisation over the admissible range recovers the
    closed-form optimum and the eigenvalue bound."""
    e3, cap = minimize_lambda_cap_supercritical(n, p, K)
    assert e3 == pytest.approx(eps3_star_supercritical(n, p), rel=1e-6)
    assert cap == pytest.approx(eigen_upper_bound(n, p, K), rel=1e-10)


@pytest.mark.parametrize("n", GRID_N)
@pytest.mark.parametrize("p", SUB_P)
@pytest.mark.parametrize("K", GRID_K)
def test_eps3_optimality_subcritical(n, p, K):
    e3, cap = minimize_lambda_cap_subcritical(n, p, K)
    assert e3 == pytest.approx(eps3_star_subcritical(n, p, K), rel=1e-6)
    assert cap == pytest.approx(eigen_upper_bound(n, p, K), rel=1e-10)


def test_golden_section_on_known_minimum():
    # argmin accuracy is limited to ~sqrt(machine eps) for a quadratic;
    # the minimum value is quadratically more accurate
    x, fx = golden_section_min(lambda x: (x - 2.0) ** 2 + 1.0, 0.0, 7.0, tol=1e-12)
    assert x == pytest.approx(2.0, abs=1e-7)
    assert fx == pytest.approx(1.0, rel=1e-14)


def test_cutoff_D_limits_and_finite_R():
    ctx_inf = FiniteRContext(R=math.inf)
    assert cutoff_D(3, 3.0, 1.0, ctx_inf) == pytest.approx(6.0, rel=1e-15)
    assert cutoff_D(2, 3.0, 0.0, ctx_inf) == 0.0
    # direct termwise sum at R = 10, eps1 = eps2 = 1, phi = 1
    ctx10 = FiniteRContext(R=10.0, eps1=1.0, eps2=1.0)
    expect = (
        6.0
        + (2 * 9 - 8) / 3.0 * 10.0 / 100.0
        + 80.0 * 4 * 11.0 / 100.0
        + 40.0 * 2 / 100.0
        + 5.0 * 16.0 * 36.0 / 4.0 / (2.0 * 100.0)
        + (abs(2.0 * 2 / 2 - 3) + 1) ** 2 * 5.0 / (2.0 * 100.0)
    )
    assert cutoff_D(3, 3.0, 1.0, ctx10) == pytest.approx(expect, rel=1e-14)
    assert cutoff_D(3, 3.0, 1.0, ctx10) > 6.0
    # the 1 + 2KR Hessian-term variant is larger but has the same limit
    from plapbounds.certificate import _cutoff_D_impl

    assert _cutoff_D_impl(3, 3.0, 1.0, ctx10, use_2kr=True) > cutoff_D(3, 3.0, 1.0, ctx10)


def test_cutoff_Dbar_limits_and_coefficient():
    ctx_inf = FiniteRContext(R=math.inf)
    assert cutoff_Dbar(3, 1.5, 1.0, ctx_inf) == pytest.approx(3.0, rel=1e-15)
    assert cutoff_Dbar(2, 1.5, 0.0, ctx_inf) == 0.0
    # leading cutoff coefficient is positive throughout the regime
    for n in GRID_N:
        for p in SUB_P:
            assert -n * p**2 + 2 * (2 * n - 1) * p - n > 0
    assert -3 * 1.5**2 + 2 * 5 * 1.5 - 3 == pytest.approx(5.25)
    assert cutoff_Dbar(3, 1.5, 1.0, FiniteRContext(R=10.0, eps1=1.0, eps2=1.0)) > 3.0


def test_finite_R_monotone_decreasing():
    e3s = eps3_star_supercritical(3, 3.0)
    sup_vals = [
        finite_R_bound_supercritical(3, 3.0, 1.0, 0.1, FiniteRContext(R=R, eps3=e3s))
        for R in (10.0, 100.0, 1000.0, 1e6)
    ]
    assert all(a > b for a, b in zip(sup_vals, sup_vals[1:]))
    e3b = eps3_star_subcritical(3, 1.5, 1.0)
    sub_vals = [
        finite_R_bound_subcritical(3, 1.5, 1.0, 0.1, FiniteRContext(R=R, eps3=e3b))
        for R in (10.0, 100.0, 1000.0, 1e6)
    ]
    assert all(a > b for a, b in zip(sub_vals, sub_vals[1:]))


def test_finite_R_converges_to_infinite_R_evaluation():
    e3s = eps3_star_supercritical(3, 3.0)
    lim = finite_R_bound_supercritical(
        3, 3.0, 1.0, 0.1, FiniteRContext(R=math.inf, eps3=e3s)
    )
    big = finite_R_bound_supercritical(
        3, 3.0, 1.0, 0.1, FiniteRContext(R=1e10, eps3=e3s)
    )
    assert big == pytest.approx(lim, rel=1e-6)
    assert big > lim


def test_finite_R_subcritical_limit_matches_closed_form():
    """At sigma = 1, eps1 = eps2 -> 0, eps3 = eps3*, the R -> infinity
    subcritical bound IS the closed-form theorem value."""
    e3 = eps3_star_subcritical(3, 1.5, 1.0)
    lim = finite_R_bound_subcritical(
        3, 1.5, 1.0, 0.1, FiniteRContext(R=math.inf, eps3=e3)
    )
    th = grad_bound_subcritical(SpectralInput(3, 1.5, 1.0, 0.1)).total
    assert lim == pytest.approx(th, rel=1e-9)


def test_supercritical_limit_vs_closed_form_gap():
    """The supercritical closed form is weaker than the chain limit:
    its sqrt-argument lam^2 coefficient carries an extra factor
    ((p-1)/(p-2))^2.  Pin the factor so the discrepancy stays tracked."""
    for n in (2, 3):
        for p in SUPER_P:
            e3 = eps3_star_supercritical(n, p)
            cert = abc_supercritical(n, p, 1.0, e3)
            chain_coeff = (cert.A**2 - 4 * cert.C) / 4.0
            closed_coeff = p**3 * (p - 1) ** (2 * (p - 1)) / ((n - 1) ** 2 * (p - 2))
            assert closed_coeff == pytest.approx(
                chain_coeff * ((p - 1) / (p - 2)) ** 2, rel=1e-12
            )
    # concrete gap at the reference point: chain limit 10.9638 vs the
    # closed-form total 11.4687 at lam = 0.1
    e3 = eps3_star_supercritical(3, 3.0)
    lim = finite_R_bound_supercritical(
        3, 3.0, 1.0, 0.1, FiniteRContext(R=math.inf, eps3=e3)
    )
    assert lim == pytest.approx(10.963848562251588, rel=1e-12)


def test_discriminant_condition_around_cap():
    for n in (2, 3):
        for p in (2.5, 3.0):
            cert = abc_supercritical(n, p, 1.0, eps3_star_supercritical(n, p))

            def disc(lam):
                return (cert.A**2 - 4 * cert.C) * lam**2 - 2 * cert.A * cert.B * lam + cert.B**2

            for frac in (0.0, 0.3, 0.7, 1.0):
                assert disc(frac * cert.lambda_cap) >= -1e-12 * cert.B**2
            assert disc(1.01 * cert.lambda_cap) < 0
            with pytest.raises(CertificateError):
                finite_R_bound_supercritical(
                    n, p, 1.0, 1.01 * cert.lambda_cap,
                    FiniteRContext(R=math.inf, eps3=cert.eps3),
                )


def test_context_admissibility():
    with pytest.raises(CertificateError):
        # eps3 above the admissible supremum for p = 3, n = 3
        cutoff_D(3, 3.0, 1.0, FiniteRContext(R=10.0, eps3=5.0))
    with pytest.raises(ValueError):
        FiniteRContext(R=10.0, sigma=1.2)
    with pytest.raises(ValueError):
        FiniteRContext(R=10.0, sigma=0.9, phi=0.5)
    with pytest.raises(ValueError):
        FiniteRContext(R=-1.0)
