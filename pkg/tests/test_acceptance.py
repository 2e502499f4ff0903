"""
Acceptance suite: one test per acceptance criterion, each printing a
PASS/FAIL line (run with -s, or read captured output on failure).

Criterion 3's "matches the closed form within 1e-6 at R = 1e6" clauses
are strict xfails: at R = 1e6 the cutoff constants still carry O(K/R)
and O(1/(eps R^2)) terms orders of magnitude above 1e-6, and in the
supercritical regime the closed form differs from the certificate
chain's limit by a factor ((p-1)/(p-2))^2 in the sqrt argument's lam^2
coefficient, so no radius makes them meet.  The attainable convergence
statements (monotone decrease, agreement with the chain's own
R -> infinity evaluation, and the subcritical closed form) are asserted
separately and pass.  Analysis lives outside the package in
notes/decisions.md; the factor itself is pinned in
test_certificate.py::test_supercritical_limit_vs_closed_form_gap.
"""

import math
from contextlib import contextmanager

import numpy as np
import pytest
from scipy.optimize import brentq
from scipy.special import j0

import plapbounds as pb
from plapbounds import certificate as ct
from plapbounds import lemma as lm
from plapbounds import solver as sv
from plapbounds.bounds import SpectralInput

GRID_N = (2, 3, 5)
GRID_K = (0.5, 1.0, 2.0)
SUB_P = (1.2, 1.5, 1.8)
SUPER_P = (2.5, 3.0, 4.0)


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({name}): PASS")


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_criterion_1_formula_fidelity():
    with criterion(1, "formula fidelity"):
        for p in (2.0 - 1e-6, 2.0 + 1e-6):
            assert abs(pb.eigen_upper_bound(2, p, 1.0) - 0.25) <= 1e-5
        for n in GRID_N:
            for p in SUB_P + SUPER_P:
                for K in GRID_K:
                    total = pb.grad_bound(SpectralInput(n, p, K, 0.0)).total
                    assert rel(total, pb.p_harmonic_bound(n, p, K)) <= 1e-12, (
                        f"lam=0 reduction fails at n={n}, p={p}, K={K}"
                    )


def test_criterion_2_certificate_reproduction():
    with criterion(2, "certificate reproduction"):
        for n in GRID_N:
            for K in GRID_K:
                for p in SUPER_P:
                    e3, cap = ct.minimize_lambda_cap_supercritical(n, p, K)
                    assert rel(cap, pb.eigen_upper_bound(n, p, K)) <= 1e-10
                    assert rel(e3, ct.eps3_star_supercritical(n, p)) <= 1e-6
                    cert = ct.abc_supercritical(n, p, K, e3)
                    ident = 4 * (p - 1) ** (2 * (p - 1)) * (p - 2) * cert.eps3 / (n - 1)
                    assert rel(cert.A**2 - 4 * cert.C, ident) <= 1e-12
                for p in SUB_P:
                    e3, cap = ct.minimize_lambda_cap_subcritical(n, p, K)
                    assert rel(cap, pb.eigen_upper_bound(n, p, K)) <= 1e-10
                    star = ct.eps3_star_subcritical(n, p, K)
                    assert rel(e3, star) <= 1e-6
                    cert = ct.abcd_subcritical(n, p, K, star)
                    relationship = 4 * p / (n - 1) * star ** (2 * (p - 1) / (2 - p))
                    assert rel(relationship, cert.Bt**2) <= 1e-10
                    assert abs(cert.At**2 - 4 * cert.Ct) <= 1e-12 * cert.At**2


def _finite_r_cells():
    sup_e3 = ct.eps3_star_supercritical(3, 3.0)
    sub_e3 = ct.eps3_star_subcritical(3, 1.5, 1.0)
    return (
        ("super", lambda c: ct.finite_R_bound_supercritical(3, 3.0, 1.0, 0.1, c), sup_e3,
         pb.grad_bound_supercritical(SpectralInput(3, 3.0, 1.0, 0.1)).total),
        ("sub", lambda c: ct.finite_R_bound_subcritical(3, 1.5, 1.0, 0.1, c), sub_e3,
         pb.grad_bound_subcritical(SpectralInput(3, 1.5, 1.0, 0.1)).total),
    )


def test_criterion_3_finite_r_monotone():
    with criterion(3, "finite-R bound monotone decreasing in R"):
        for name, fn, e3, _ in _finite_r_cells():
            vals = [fn(ct.FiniteRContext(R=R, eps3=e3)) for R in (10.0, 1e2, 1e3, 1e6)]
            assert all(a > b for a, b in zip(vals, vals[1:])), f"{name}: {vals}"


def test_criterion_3_finite_r_converges_to_chain_limit():
    """Attainable form of the convergence clause: by R = 1e10 the bound
    meets the chain's own R = infinity evaluation to 1e-6; in the
    subcritical regime that limit IS the closed-form theorem value."""
    with criterion(3, "finite-R bound converges to the chain limit"):
        for name, fn, e3, closed_form in _finite_r_cells():
            big = fn(ct.FiniteRContext(R=1e10, eps3=e3))
            lim = fn(ct.FiniteRContext(R=math.inf, eps3=e3))
            assert rel(big, lim) <= 1e-6, f"{name}: {rel(big, lim)}"
            if name == "sub":
                assert rel(lim, closed_form) <= 1e-9


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the supercritical closed form is weaker than the certificate chain's "
        "limit by ((p-1)/(p-2))^2 in the sqrt-argument lam^2 coefficient "
        "(4.4% in total at this cell), and at R = 1e6 the cutoff constants "
        "still contribute O(1) through the eps terms; see notes/decisions.md"
    ),
)
def test_criterion_3_match_at_1e6_supercritical():
    with criterion(3, "finite-R matches closed form at R=1e6 (supercritical)"):
        name, fn, e3, closed_form = _finite_r_cells()[0]
        val = fn(ct.FiniteRContext(R=1e6, eps3=e3))
        assert rel(val, closed_form) <= 1e-6, f"rel gap {rel(val, closed_form):.3e}"


@pytest.mark.xfail(
    strict=True,
    reason=(
        "at R = 1e6 with eps1 = eps2 = 1e-10 the cutoff constant still carries "
        "80(n+p-2)K/R ~ 2e-4 and phi/(2 eps R^2) ~ 7e-2 terms, leaving the "
        "bound ~3% above its limit; meeting 1e-6 needs R >~ 1e9; see "
        "notes/decisions.md"
    ),
)
def test_criterion_3_match_at_1e6_subcritical():
    with criterion(3, "finite-R matches closed form at R=1e6 (subcritical)"):
        name, fn, e3, closed_form = _finite_r_cells()[1]
        val = fn(ct.FiniteRContext(R=1e6, eps3=e3))
        assert rel(val, closed_form) <= 1e-6, f"rel gap {rel(val, closed_form):.3e}"


def test_criterion_4_eigenvalue_bound_verification():
    with criterion(4, "eigenvalue bound verification at desk scale"):
        # solver validation first: 1-D closed form and the flat disk
        for p, L, expect in (
            (2.0, math.pi, 1.0),
            (3.0, sv.pi_p(3.0), 2.0),
            (1.5, sv.pi_p(1.5), 0.5),
        ):
            lam = sv.interval_eigenvalue_1d(p, L, tol=2e-7 * expect).lam
            assert rel(lam, expect) <= 1e-6, f"1-D validation failed at p={p}"
        j01sq = brentq(j0, 2.0, 3.0) ** 2
        flat = sv.dirichlet_eigenvalue(pb.ModelSpace(2, 0.0), 2.0, 1.0, tol=1e-8).lam
        assert rel(flat, j01sq) <= 1e-3

        for n in (2, 3):
            for p in (1.5, 2.0, 2.5, 3.0):
                ms = pb.ModelSpace(n, 1.0)
                bound = pb.eigen_upper_bound(n, p, 1.0)
                lams = [
                    sv.dirichlet_eigenvalue(ms, p, R, tol=1e-6).lam
                    for R in (5.0, 10.0, 20.0, 40.0)
                ]
                assert all(lam > bound for lam in lams), f"bound violated n={n} p={p}"
                assert all(a > b for a, b in zip(lams, lams[1:])), (
                    f"not decreasing in R at n={n}, p={p}"
                )
                margin = 0.10 if p == 2.0 else 0.15
                assert lams[-1] <= (1 + margin) * bound, (
                    f"R=40 gap {lams[-1] / bound - 1:.3f} exceeds {margin} "
                    f"at n={n}, p={p}"
                )


def test_criterion_5_gradient_estimate(gradient_profiles):
    with criterion(5, "gradient estimate on positive solutions"):
        for (n, p), (base, _, lam) in gradient_profiles.items():
            sup = sv.sup_gradient(base, 0.5)
            bound = pb.grad_bound(SpectralInput(n, p, 1.0, lam)).total
            assert sup <= bound, (
                f"sup gradient {sup} exceeds bound {bound} at n={n}, p={p}; "
                f"profile lam={lam}, R={base.R}"
            )


def test_criterion_6_lemma_oracle(gradient_profiles):
    # Dips below the tolerance-scaled noise floor count as converged:
    # past it the residual is integrator noise, not discretisation.
    noise_floor = 1e-4
    with criterion(6, "pointwise inequality oracle"):
        for (n, p), (base, refined, lam) in gradient_profiles.items():
            rep = lm.check_in5(base, tol=1e-2)
            rep_f = lm.check_in5(refined, tol=1e-2)
            assert rep.violations == 0, f"violations at n={n}, p={p}"
            assert rep_f.violations == 0, f"refined violations at n={n}, p={p}"
            dip, dip_f = max(0.0, -rep.min_slack), max(0.0, -rep_f.min_slack)
            assert dip_f <= max(dip, noise_floor), (
                f"dip did not shrink under refinement at n={n}, p={p}: "
                f"{dip:.3e} -> {dip_f:.3e}"
            )


def test_criterion_7_no_unreproduced_results():
    """Every quantitative statement in scope is a formula or inequality
    covered by criteria 1-6; there are no experiment tables to
    reproduce, so this criterion is an explicit no-op."""
    with criterion(7, "no desk-unreproducible results"):
        pass
