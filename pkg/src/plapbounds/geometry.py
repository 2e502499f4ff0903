"""
Constant-curvature model spaces and their radial coefficients.

A model space here is the simply connected space form of sectional
curvature -K**2 (hyperbolic for K > 0, Euclidean for K = 0).  Everything
radial about it is encoded by the warping function

    sn_K(r) = sinh(K r) / K      (K > 0),
    sn_0(r) = r                  (K = 0),

from which the volume weight w(r) = sn_K(r)**(n-1) and the Laplacian of
the distance function Delta r = (n-1) sn_K'(r)/sn_K(r) follow.  These
three functions are all the geometry the radial eigenvalue solver and
the inequality checks need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModelSpace",
    "warping",
    "distance_laplacian",
    "volume_weight",
]

# Beyond this value of K*r, coth(K*r) is 1 to double precision and
# sinh(K*r) is evaluated through its dominant exponential.
_LARGE_KR = 30.0


@dataclass(frozen=True)
class ModelSpace:
    """Simply connected space form of curvature -K**2.

    Parameters
    ----------
    n : int
        Dimension, at least 2.  (The 1-D interval problem is handled by
        the dedicated interval solver and never builds a ModelSpace.)
    K : float
        Curvature scale, >= 0.  K = 0 is the flat space, K > 0 the
        hyperbolic space of curvature -K**2.
    """

    n: int
    K: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.n}")
        if not math.isfinite(self.K) or self.K < 0:
            raise ValueError(f"curvature scale must be finite and >= 0, got {self.K}")

    @property
    def kind(self) -> str:
        return "flat" if self.K == 0 else "hyperbolic"


def _check_radii(r, positive: bool):
    scalar = np.ndim(r) == 0
    rr = np.atleast_1d(np.asarray(r, dtype=float))
    if positive:
        if np.any(rr <= 0):
            raise ValueError("radius must be > 0")
    elif np.any(rr < 0):
        raise ValueError("radius must be >= 0")
    return rr, scalar


def _sn(K: float, r: np.ndarray) -> np.ndarray:
    """Warping function sn_K(r), elementwise."""
    if K == 0.0:
        return r.copy()
    x = K * r
    out = np.empty_like(x)
    small = x <= _LARGE_KR
    out[small] = np.sinh(x[small]) / K
    # sinh(x) = e^x/2 up to a relative error e^(-2x) < 1e-26 here.
    out[~small] = np.exp(x[~small] - math.log(2.0 * K))
    return out


def _coth(x: np.ndarray) -> np.ndarray:
    out = np.ones_like(x)
    small = x <= _LARGE_KR
    out[small] = 1.0 / np.tanh(x[small])
    return out


def _log_sn(K: float, r: np.ndarray) -> np.ndarray:
    """log sn_K(r); stable for arbitrarily large K*r."""
    if K == 0.0:
        return np.log(r)
    x = K * r
    out = np.empty_like(x)
    small = x <= _LARGE_KR
    out[small] = np.log(np.sinh(x[small]) / K)
    out[~small] = x[~small] - math.log(2.0 * K)
    return out


def warping(ms: ModelSpace, r):
    """Evaluate sn_K(r) on the model space.

    Accepts a scalar or array radius r >= 0.  Strictly increasing, with
    sn_K(0) = 0 and unit slope at the origin.
    """
    rr, scalar = _check_radii(r, positive=False)
    out = _sn(ms.K, rr)
    return float(out[0]) if scalar else out


def distance_laplacian(ms: ModelSpace, r):
    """Laplacian of the distance function, (n-1) sn_K'(r)/sn_K(r).

    Equals (n-1) K coth(K r) for K > 0 and (n-1)/r for K = 0; strictly
    decreasing in r, with limit (n-1) K as r -> infinity.  Requires
    r > 0 (the origin is a singular point of the radial operator).
    """
    rr, scalar = _check_radii(r, positive=True)
    n, K = ms.n, ms.K
    if K == 0.0:
        out = (n - 1) / rr
    else:
        out = (n - 1) * K * _coth(K * rr)
    return float(out[0]) if scalar else out


def volume_weight(ms: ModelSpace, r):
    """Radial volume weight w(r) = sn_K(r)**(n-1).

    This is the weight that turns the p-Laplacian into the radial form
    (1/w) (w |u'|^(p-2) u')'.  Vanishes at r = 0 for n >= 2.
    """
    rr, scalar = _check_radii(r, positive=False)
    out = _pow_sn(ms.n, ms.K, rr)
    return float(out[0]) if scalar else out


def _pow_sn(n: int, K: float, r: np.ndarray) -> np.ndarray:
    """sn_K(r)**(n-1) with the zero radius handled exactly."""
    if n == 1:
        return np.ones_like(r)
    out = np.zeros_like(r)
    pos = r > 0
    # exp of (n-1) log sn keeps large K*r out of sinh overflow territory.
    out[pos] = np.exp((n - 1) * _log_sn(K, r[pos]))
    return out


def _weight_integral_near_zero(n: int, K: float, r0: float) -> float:
    """integral of w over [0, r0] for small r0, by series.

    w(r) = r^(n-1) (1 + (n-1)(Kr)^2/6 + O((Kr)^4)); the truncation error
    is negligible for the startup radii (K*r0 << 1) this serves.
    """
    lead = r0**n / n
    corr = (n - 1) * K**2 * r0 ** (n + 2) / (6.0 * (n + 2))
    return lead + corr
