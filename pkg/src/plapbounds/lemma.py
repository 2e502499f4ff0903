"""
Pointwise check of the key differential inequality behind the bounds.

For G = |grad h|**p built from a solution of the log-substituted
equation, the elliptic operator L = div(|grad h|**(p-2) A grad .) with
A = Id + (p-2) grad h (x) grad h / |grad h|**2 satisfies a lower bound
L(G) >= RHS(G, G', lam, K), where RHS collects a G**2 term, curvature
and lam couplings, and a |grad G|**2 / G**(2/p) term weighted by

    alpha(n, p) = min(2(p-1), n(p-1)**2 / (n-1)).

For radial data A grad G = (p-1) G' d/dr, so L reduces to
(1/w) (w (p-1) |h'|**(p-2) G')' and both sides are computable from a
solver profile by central differences.  ``check_in5`` evaluates the
inequality on an interior region and reports the worst normalised
slack; profiles must first pass the equation-residual gate so that
discretisation error is not mistaken for a violation of the lemma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .bounds import _rpow
from .geometry import _pow_sn
from .solver import RadialProfile, equation_residual, grad_h

__all__ = [
    "GateError",
    "LemmaReport",
    "alpha",
    "default_region",
    "discrete_L_of_G",
    "in5_rhs",
    "check_in5",
]

_RESIDUAL_GATE_REL = 1e-4
_SLACK_FLOOR = 1e-30


class GateError(ValueError):
    """The profile failed a precondition of the inequality check; this
    is a data-quality failure, not a lemma violation."""


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of a pointwise inequality check.

    min_slack is the minimum over the region of (LHS - RHS) / max(G^2,
    floor); violations counts grid points with slack below -tol.
    """

    checked_range: Tuple[float, float]
    min_slack: float
    violations: int
    n_points: int
    tol: float

    @property
    def ok(self) -> bool:
        return self.violations == 0


def alpha(n: int, p: float) -> float:
    """Weight min(2(p-1), n(p-1)**2/(n-1)) of the |grad G|**2 term."""
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    if not p > 1:
        raise ValueError(f"exponent p must be > 1, got {p}")
    return min(2.0 * (p - 1.0), n * (p - 1.0) ** 2 / (n - 1.0))


def default_region(profile: RadialProfile, delta: float = 1e-3) -> Tuple[float, float]:
    """Interior region for inequality checks.

    Starts past max(0.05 R, 10 grid steps) to clear the h' = 0
    degeneracy at the centre, and stops where u has decayed to delta of
    its central value or at R/2, whichever is smaller.
    """
    r, u = profile.r, profile.u
    r_min = max(0.05 * profile.R, r[0] + 10.0 * profile.dr)
    below = np.nonzero(u < delta * u[0])[0]
    r_decay = r[below[0]] if len(below) else r[-1]
    r_max = min(r_decay, 0.5 * profile.R)
    if not r_min < r_max:
        raise GateError(
            f"empty check region: r_min={r_min} >= r_max={r_max} "
            "(profile decays too fast or grid too coarse)"
        )
    return float(r_min), float(r_max)


def _region_slice(profile: RadialProfile, region: Tuple[float, float], margin: int) -> slice:
    r = profile.r
    lo, hi = region
    if not r[0] <= lo < hi <= r[-1]:
        raise ValueError(f"region [{lo}, {hi}] outside profile range")
    i0 = max(int(np.searchsorted(r, lo, "left")), margin)
    i1 = min(int(np.searchsorted(r, hi, "right")), len(r) - margin)
    if i1 - i0 < 5:
        raise ValueError(f"region [{lo}, {hi}] covers fewer than 5 usable points")
    return slice(i0, i1)


def _central(y: np.ndarray, dr: float) -> np.ndarray:
    """Central difference on the interior; edges padded with NaN."""
    out = np.full_like(y, np.nan)
    out[1:-1] = (y[2:] - y[:-2]) / (2.0 * dr)
    return out


def discrete_L_of_G(profile: RadialProfile, region: Tuple[float, float]):
    """Radial L(G) = (1/w) (w (p-1) |h'|**(p-2) G')' on the region grid.

    Central differences for both derivative layers (second order).
    Returns (r, LG) restricted to the region; h' must be bounded away
    from zero there.
    """
    p = profile.p
    hp = grad_h(profile)
    G = np.abs(hp) ** p
    sl = _region_slice(profile, region, margin=2)
    if np.min(np.abs(hp[sl.start - 2 : sl.stop + 2])) == 0.0:
        raise ValueError("h' vanishes inside the check region")
    dr = profile.dr
    w = _pow_sn(profile.n, profile.K, profile.r)
    Gp = _central(G, dr)
    flux = w * (p - 1.0) * np.abs(hp) ** (p - 2.0) * Gp
    LG = _central(flux, dr) / w
    return profile.r[sl], LG[sl]


def in5_rhs(profile: RadialProfile, lam: float, region: Tuple[float, float]):
    """Right-hand side of the differential inequality on the region grid.

    Needs G > 0 on the region (a G**-1 coupling with lam appears).
    Returns (r, RHS) with G' taken by the same central differences as
    discrete_L_of_G, so the two sides are comparable at matching order.
    """
    n, p, K = profile.n, profile.p, profile.K
    hp = grad_h(profile)
    G = np.abs(hp) ** p
    sl = _region_slice(profile, region, margin=2)
    if np.min(G[sl.start - 1 : sl.stop + 1]) <= 0.0:
        raise ValueError("G vanishes inside the check region")
    Gp = _central(G, profile.dr)
    a = alpha(n, p)
    c_lam = _rpow(p - 1.0, p - 1.0) * lam
    rs, gs, gps, hps = profile.r[sl], G[sl], Gp[sl], hp[sl]
    rhs = (
        p / (n - 1.0) * gs**2
        + 2.0 * p / (n - 1.0) * c_lam * gs
        + p / (n - 1.0) * _rpow(p - 1.0, p - 1.0) * c_lam * lam
        - p * (n - 1.0) * K**2 * gs ** (2.0 * (p - 1.0) / p)
        + a / p * gps**2 / gs ** (2.0 / p)
        + (2.0 * (p - 1.0) / (n - 1.0) * (1.0 + c_lam / gs) - p)
        * hps * gps * np.abs(hps) ** (p - 2.0)
    )
    return rs, rhs


def check_in5(
    profile: RadialProfile,
    lam: Optional[float] = None,
    region: Optional[Tuple[float, float]] = None,
    tol: float = 1e-2,
) -> LemmaReport:
    """Verify L(G) >= RHS pointwise on the region, normalised slack.

    The slack (LHS - RHS) is normalised by max(G**2, 1e-30) at each
    point, since the inequality spans many orders of magnitude along a
    profile.  The profile must pass the equation-residual gate on the
    region first; a gate failure raises GateError instead of counting
    as a lemma violation.
    """
    if lam is None:
        lam = profile.lam
    if region is None:
        region = default_region(profile)
    scale = _rpow(profile.p - 1.0, profile.p - 1.0) * lam
    res = equation_residual(profile, region[0], region[1])
    gate = _RESIDUAL_GATE_REL * max(scale, _gradient_scale(profile, region))
    if res > gate:
        raise GateError(
            f"equation residual {res:.3e} exceeds the gate {gate:.3e} on "
            f"region {region}; refine the profile grid before checking"
        )
    rs, lhs = discrete_L_of_G(profile, region)
    _, rhs = in5_rhs(profile, lam, region)
    hp = grad_h(profile)
    G = np.abs(hp) ** profile.p
    sl = _region_slice(profile, region, margin=2)
    slack = (lhs - rhs) / np.maximum(G[sl] ** 2, _SLACK_FLOOR)
    min_slack = float(np.min(slack))
    violations = int(np.count_nonzero(slack < -tol))
    return LemmaReport(
        checked_range=(float(rs[0]), float(rs[-1])),
        min_slack=min_slack,
        violations=violations,
        n_points=len(slack),
        tol=tol,
    )


def _gradient_scale(profile: RadialProfile, region: Tuple[float, float]) -> float:
    sl = _region_slice(profile, region, margin=2)
    hp = grad_h(profile)[sl]
    return float(np.max(np.abs(hp) ** profile.p))
