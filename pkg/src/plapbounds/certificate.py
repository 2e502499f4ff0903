"""
Finite-radius certificate machinery behind the eigenvalue bound.

The chain, in the order the derivation runs:

1. ``cutoff_D`` / ``cutoff_Dbar`` -- the localisation constants that a
   cutoff function on a geodesic ball of radius R contributes.  They
   decay to p (n-1) K**2 * phi as R grows.
2. ``finite_R_bound_*`` -- the pre-limit bound on the localised
   quantity sup phi |grad h|**p, obtained by resolving a quadratic
   inequality a x**2 + b x + c <= 0 at the maximum point
   (``quadratic_upper_root``).
3. ``abc_supercritical`` / ``abcd_subcritical`` -- the coefficients of
   the induced quadratic inequality in lam after R -> infinity,
   eps1, eps2 -> 0, whose admissibility caps lam at ``lambda_cap``.
4. ``eps3_star_*`` -- the optimal Young-inequality weight; at it
   lambda_cap collapses to the closed-form bound ((n-1) K / p)**p.

Step 4 can be cross-checked without the closed form: minimise
lambda_cap over eps3 numerically (``minimize_lambda_cap_*``, golden
section) and compare argmin and minimum against ``eps3_star_*`` and
``bounds.eigen_upper_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import _rpow
from .lemma import alpha

__all__ = [
    "CertificateError",
    "CertificateSuper",
    "CertificateSub",
    "FiniteRContext",
    "cutoff_D",
    "cutoff_Dbar",
    "abc_supercritical",
    "abcd_subcritical",
    "eps3_star_supercritical",
    "eps3_star_subcritical",
    "eps3_admissible_sup",
    "finite_R_bound_supercritical",
    "finite_R_bound_subcritical",
    "quadratic_upper_root",
    "golden_section_min",
    "minimize_lambda_cap_supercritical",
    "minimize_lambda_cap_subcritical",
]


class CertificateError(ValueError):
    """A certificate precondition failed (inadmissible parameters or
    negative discriminant: lam is not certified at this radius)."""


@dataclass(frozen=True)
class FiniteRContext:
    """Localisation parameters of the pre-limit bound.

    R may be math.inf, in which case every cutoff term vanishes and the
    constants reduce to their large-radius limits.  sigma is the ratio
    of the half-ball gradient sup to the full-ball one (1 when unknown,
    which is the conservative choice only in the limit; solver profiles
    supply the measured value).  phi is the cutoff value at the maximum
    point, in [sigma, 1]; 1 is conservative since every phi-carrying
    term of the cutoff constants is nonnegative.
    """

    R: float
    eps1: float = 1e-10
    eps2: float = 1e-10
    eps3: float = 1.0
    sigma: float = 1.0
    phi: float = 1.0

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError(f"radius must be > 0, got {self.R}")
        for name in ("eps1", "eps2", "eps3"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if not 0 < self.sigma <= 1:
            raise ValueError(f"sigma must be in (0, 1], got {self.sigma}")
        if not self.sigma <= self.phi <= 1:
            raise ValueError(
                f"phi must be in [sigma, 1] = [{self.sigma}, 1], got {self.phi}"
            )


@dataclass(frozen=True)
class CertificateSuper:
    """Quadratic-in-lam coefficients for p > 2 and the cap they imply.

    Satisfies A**2 - 4C = 4 (p-1)**(2(p-1)) (p-2) eps3 / (n-1) > 0 and
    lambda_cap = B / (A + 2 sqrt(C)).
    """

    A: float
    B: float
    C: float
    eps3: float
    lambda_cap: float


@dataclass(frozen=True)
class CertificateSub:
    """Quadratic-in-lam coefficients for 1 < p < 2 and the implied cap.

    The lam**2 coefficient At**2 - 4Ct vanishes identically, so the cap
    is lambda_cap = (Bt**2 + 4 Dt) / (2 At Bt).
    """

    At: float
    Bt: float
    Ct: float
    Dt: float
    eps3: float
    lambda_cap: float


def eps3_admissible_sup(n: int, p: float) -> float:
    """Supremum p**2 / ((n-1)(p-2)) of the admissible eps3 range, p > 2."""
    if not p > 2:
        raise ValueError(f"admissible range is a p > 2 notion, got p={p}")
    return p**2 / ((n - 1) * (p - 2))


def _check_np(n: int, p: float):
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    if not p > 1:
        raise ValueError(f"exponent p must be > 1, got {p}")


def cutoff_D(n: int, p: float, K: float, ctx: FiniteRContext) -> float:
    """Localisation constant D of the supercritical (p > 2) chain.

    Sum of the curvature term p (n-1) K**2 phi and five cutoff-decay
    terms, each O(1/R) or faster.  With use_2kr=True the Hessian
    comparison term uses (1 + 2KR) instead of the (1 + KR) carried by
    the assembled constant; both vanish as R -> infinity.
    """
    return _cutoff_D_impl(n, p, K, ctx, use_2kr=False)


def _cutoff_D_impl(n, p, K, ctx, use_2kr):
    _check_np(n, p)
    if not p > 2:
        raise ValueError(f"D is the p > 2 constant, got p={p}")
    _require_admissible_super(n, p, ctx)
    R, phi = ctx.R, ctx.phi
    curvature = p * (n - 1) * K**2 * phi
    if math.isinf(R):
        return curvature
    a = alpha(n, p)
    hess_factor = 1.0 + (2.0 * K * R if use_2kr else K * R)
    return (
        curvature
        + (2 * p**2 - (a + 4.0)) / p * 10.0 / R**2
        + 80.0 * (n + p - 2) * hess_factor / R**2
        + 40.0 * (p - 1) / R**2
        + 5.0 * _rpow(p - 1, 2 * (p - 1)) * ((n + 1) * p - 2 * n) ** 2 / (n - 1) ** 2
        * phi / (2.0 * ctx.eps1 * R**2)
        + (abs(2.0 * (p - 1) / (n - 1) - p) + (p - 2)) ** 2
        * 5.0 * phi / (2.0 * ctx.eps2 * R**2)
    )


def cutoff_Dbar(n: int, p: float, K: float, ctx: FiniteRContext, use_2kr: bool = False) -> float:
    """Localisation constant of the subcritical (1 < p < 2) chain.

    The leading cutoff coefficient -n p**2 + 2(2n-1) p - n is positive
    throughout n >= 2, 1 < p < 2; the guard is kept as an assertion.
    """
    _check_np(n, p)
    if not 1 < p < 2:
        raise ValueError(f"Dbar is the 1 < p < 2 constant, got p={p}")
    coeff = -n * p**2 + 2 * (2 * n - 1) * p - n
    if coeff <= 0:
        raise CertificateError(
            f"cutoff coefficient -n p^2 + 2(2n-1) p - n = {coeff} <= 0 "
            f"at n={n}, p={p}"
        )
    R, phi = ctx.R, ctx.phi
    curvature = p * (n - 1) * K**2 * phi
    if math.isinf(R):
        return curvature
    hess_factor = 1.0 + (2.0 * K * R if use_2kr else K * R)
    return (
        curvature
        + coeff / (p * (n - 1)) * 10.0 / R**2
        + 80.0 * (n + p - 2) * hess_factor / R**2
        + 40.0 / R**2
        + 5.0 * _rpow(p - 1, 2 * (p - 1)) * ((2 - p) * n + 3 * p - 4) ** 2
        / (n - 1) ** 2 * phi / (2.0 * ctx.eps1 * R**2)
        + 4.0 * (n - p) ** 2 / (n - 1) ** 2 * 5.0 * phi / (2.0 * ctx.eps2 * R**2)
    )


def abc_supercritical(n: int, p: float, K: float, eps3: float) -> CertificateSuper:
    """Limit quadratic coefficients (A, B, C) for p > 2 at a given eps3."""
    _check_np(n, p)
    if not p > 2:
        raise ValueError(f"supercritical coefficients need p > 2, got {p}")
    sup = eps3_admissible_sup(n, p)
    if not 0 < eps3 < sup:
        raise CertificateError(
            f"eps3={eps3} outside the admissible range (0, {sup})"
        )
    A = 2.0 * p * _rpow(p - 1, p - 1) / (n - 1)
    B = 2.0 / p * _rpow(p * (n - 1), p / 2.0) * _rpow(K, p) / _rpow(eps3, (p - 2) / 2.0)
    C = (p / (n - 1) - (p - 2) * eps3 / p) * p * _rpow(p - 1, 2 * (p - 1)) / (n - 1)
    cap = B / (A + 2.0 * math.sqrt(C))
    return CertificateSuper(A, B, C, eps3, cap)


def eps3_star_supercritical(n: int, p: float) -> float:
    """Optimal eps3 = p**3 / ((n-1)(p-1)**2); interior to the admissible
    range since p (p-2) < (p-1)**2."""
    _check_np(n, p)
    if not p > 2:
        raise ValueError(f"supercritical optimum needs p > 2, got {p}")
    return p**3 / ((n - 1) * (p - 1) ** 2)


def abcd_subcritical(n: int, p: float, K: float, eps3: float) -> CertificateSub:
    """Limit quadratic coefficients (At, Bt, Ct, Dt) for 1 < p < 2."""
    _check_np(n, p)
    if not 1 < p < 2:
        raise ValueError(f"subcritical coefficients need 1 < p < 2, got {p}")
    if not eps3 > 0:
        raise CertificateError(f"eps3 must be > 0, got {eps3}")
    At = 2.0 * p * _rpow(p - 1, p - 1) / (n - 1)
    Bt = 2.0 * (p - 1) / p * _rpow(p * (n - 1) * K**2, p / (2.0 * (p - 1))) / eps3
    Ct = p**2 * _rpow(p - 1, 2 * (p - 1)) / (n - 1) ** 2
    Dt = (2.0 - p) / (n - 1) * _rpow(eps3, 2.0 * (p - 1) / (2.0 - p))
    if Bt == 0.0:
        raise CertificateError("K = 0 degenerates the subcritical cap (Bt = 0)")
    cap = (Bt**2 + 4.0 * Dt) / (2.0 * At * Bt)
    return CertificateSub(At, Bt, Ct, Dt, eps3, cap)


def eps3_star_subcritical(n: int, p: float, K: float) -> float:
    """Optimal subcritical eps3, the root of
    (4p/(n-1)) eps3**(2(p-1)/(2-p)) = Bt(eps3)**2."""
    _check_np(n, p)
    if not 1 < p < 2:
        raise ValueError(f"subcritical optimum needs 1 < p < 2, got {p}")
    if not K > 0:
        raise CertificateError("K = 0 degenerates the subcritical optimum")
    return _rpow((n - 1) * (p - 1) ** 2 / p**3, (2.0 - p) / 2.0) * _rpow(
        p * (n - 1) * K**2, p * (2.0 - p) / (2.0 * (p - 1))
    )


def quadratic_upper_root(a: float, b: float, c: float) -> float:
    """Largest x with a x**2 + b x + c <= 0, i.e. (-b + sqrt(b^2-4ac)) / 2a."""
    if not a > 0:
        raise ValueError(f"leading coefficient must be > 0, got {a}")
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}: no real root")
    return (-b + math.sqrt(disc)) / (2.0 * a)


def _require_admissible_super(n: int, p: float, ctx: FiniteRContext):
    lead = p * ctx.sigma / (n - 1) - ctx.eps2 - (p - 2) * ctx.eps3 / p
    if not lead > 0:
        raise CertificateError(
            "inadmissible context: p*sigma/(n-1) - eps2 - (p-2)*eps3/p "
            f"= {lead} must be positive"
        )
    sup = eps3_admissible_sup(n, p)
    if not ctx.eps3 < sup:
        raise CertificateError(
            f"eps3={ctx.eps3} outside the admissible range (0, {sup})"
        )


def finite_R_bound_supercritical(
    n: int, p: float, K: float, lam: float, ctx: FiniteRContext, use_2kr: bool = False
) -> float:
    """Pre-limit bound on sup phi |grad h|**p over the ball B(R), p > 2.

    Resolves the maximum-point quadratic with the cutoff constant D(R);
    a negative discriminant means lam is not certified at this radius
    and raises CertificateError.
    """
    _check_np(n, p)
    if not p > 2:
        raise ValueError(f"supercritical bound needs p > 2, got {p}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    D = _cutoff_D_impl(n, p, K, ctx, use_2kr)
    sigma = ctx.sigma
    a = p * sigma / (n - 1) - ctx.eps2 - (p - 2) * ctx.eps3 / p
    b = (
        2.0 * p / (n - 1) * _rpow(p - 1, p - 1) * lam * sigma**2
        - 2.0 / p * _rpow(D, p / 2.0) / _rpow(ctx.eps3, (p - 2) / 2.0)
    )
    c = (p * _rpow(p - 1, 2 * (p - 1)) / (n - 1) * sigma**3 - ctx.eps1) * lam**2
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise CertificateError(
            f"certificate failure: discriminant {disc} < 0 "
            f"(lam={lam} inadmissible at R={ctx.R})"
        )
    return quadratic_upper_root(a, b, c)


def finite_R_bound_subcritical(
    n: int, p: float, K: float, lam: float, ctx: FiniteRContext, use_2kr: bool = False
) -> float:
    """Pre-limit bound on sup phi |grad h|**p over B(R), 1 < p < 2.

    Same contract as the supercritical version; the quadratic carries
    the extra constant term -(2-p)/p * eps3**(2(p-1)/(2-p)).
    """
    _check_np(n, p)
    if not 1 < p < 2:
        raise ValueError(f"subcritical bound needs 1 < p < 2, got {p}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    sigma = ctx.sigma
    a = p * sigma / (n - 1) - ctx.eps2
    if not a > 0:
        raise CertificateError(
            f"inadmissible context: p*sigma/(n-1) - eps2 = {a} must be positive"
        )
    Dbar = cutoff_Dbar(n, p, K, ctx, use_2kr)
    b = (
        2.0 * p / (n - 1) * _rpow(p - 1, p - 1) * lam * sigma**2
        - 2.0 * (p - 1) / p * _rpow(Dbar, p / (2.0 * (p - 1))) / ctx.eps3
    )
    c = (p * _rpow(p - 1, 2 * (p - 1)) / (n - 1) * sigma**3 - ctx.eps1) * lam**2 - (
        2.0 - p
    ) / p * _rpow(ctx.eps3, 2.0 * (p - 1) / (2.0 - p))
    disc = b * b - 4.0 * a * c
    if disc < 0:
        raise CertificateError(
            f"certificate failure: discriminant {disc} < 0 "
            f"(lam={lam} inadmissible at R={ctx.R})"
        )
    return quadratic_upper_root(a, b, c)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_min(fn, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 500):
    """Golden-section minimum of a unimodal fn on [lo, hi].

    Returns (argmin, min value); tol is the relative bracket width at
    which the search stops.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    for _ in range(max_iter):
        if hi - lo <= tol * max(abs(lo), abs(hi)):
            break
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = fn(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = fn(x2)
    xm = 0.5 * (lo + hi)
    return xm, fn(xm)


def minimize_lambda_cap_supercritical(n: int, p: float, K: float, tol: float = 1e-9):
    """Numerically minimise the p > 2 cap over the admissible eps3 range.

    Independent check of eps3_star_supercritical: scans the interval
    (0, p^2/((n-1)(p-2))) without using the closed-form optimum.
    """
    sup = eps3_admissible_sup(n, p)
    lo, hi = 1e-9 * sup, (1.0 - 1e-12) * sup

    def cap(e3):
        return abc_supercritical(n, p, K, e3).lambda_cap

    return golden_section_min(cap, lo, hi, tol=tol)


def minimize_lambda_cap_subcritical(n: int, p: float, K: float, tol: float = 1e-9):
    """Numerically minimise the 1 < p < 2 cap over eps3 > 0.

    The cap is a sum of a decreasing and an increasing power of eps3,
    so a geometric expansion around an interior point brackets the
    minimum before the golden-section refinement.
    """

    def cap(e3):
        return abcd_subcritical(n, p, K, e3).lambda_cap

    lo, hi = 1.0, 1.0
    while cap(lo / 8.0) < cap(lo):
        lo /= 8.0
        if lo < 1e-200:
            raise CertificateError("failed to bracket the eps3 minimum from below")
    while cap(hi * 8.0) < cap(hi):
        hi *= 8.0
        if hi > 1e200:
            raise CertificateError("failed to bracket the eps3 minimum from above")
    return golden_section_min(cap, lo / 8.0, hi * 8.0, tol=tol)
