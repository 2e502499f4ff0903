"""
Closed-form spectral bounds for the p-Laplacian under curvature >= -K**2.

Implemented quantities, for dimension n, exponent p > 1, curvature
scale K >= 0 and eigenvalue candidate lam >= 0:

* eigen_upper_bound      -- ((n-1) K / p)**p, the upper bound on the
                            first eigenvalue (both exponent regimes).
* grad_bound_supercritical (p > 2) and grad_bound_subcritical
  (1 < p < 2)            -- pointwise bounds on |grad h|**p for
                            h = (p-1) log u, u a positive solution of
                            Delta_p u = -lam |u|**(p-2) u, returned as a
                            term-by-term breakdown.
* p_harmonic_bound       -- the lam = 0 specialisation (positive
                            p-harmonic functions).
* cheng_bound            -- the classical p = 2 comparison value
                            (n-1)**2 K**2 / 4.

The p = 2 case is deliberately excluded from the two gradient formulas
(one has p-2 in a denominator); it is reachable only as a limit, which
the verification suites probe at p = 2 +- 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "SpectralInput",
    "BoundBreakdown",
    "eigen_upper_bound",
    "grad_bound_supercritical",
    "grad_bound_subcritical",
    "p_harmonic_bound",
    "cheng_bound",
]

# Relative slack allowed when callers feed an eigenvalue computed
# numerically that lands just above the closed-form cap.
_LAMBDA_CLAMP_REL = 1e-12


def _rpow(x: float, q: float) -> float:
    """x**q via exp(q log x), with the x = 0 corner exact.

    Keeps K = 0 and lam = 0 evaluations exactly zero instead of
    producing 0**negative surprises; x must be >= 0.
    """
    if x < 0:
        raise ValueError(f"negative base {x} in real power")
    if x == 0.0:
        if q > 0:
            return 0.0
        if q == 0:
            return 1.0
        raise ZeroDivisionError("0**q with q < 0")
    return math.exp(q * math.log(x))


@dataclass(frozen=True)
class SpectralInput:
    """Parameter tuple (n, p, K, lam) feeding the closed-form formulas."""

    n: int
    p: float
    K: float
    lam: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.n}")
        if not self.p > 1:
            raise ValueError(f"exponent p must be > 1, got {self.p}")
        if self.K < 0:
            raise ValueError(f"curvature scale must be >= 0, got {self.K}")
        if self.lam < 0:
            raise ValueError(f"eigenvalue candidate must be >= 0, got {self.lam}")


@dataclass(frozen=True)
class BoundBreakdown:
    """Term-by-term breakdown of a gradient bound.

    total = prefactor * (linear_term + sqrt_value), with
    sqrt_value = sqrt(sqrt_argument).  The sqrt_argument is nonnegative
    for every admissible lam (0 <= lam <= eigen_upper_bound).
    """

    prefactor: float
    linear_term: float
    sqrt_argument: float
    sqrt_value: float
    total: float


def eigen_upper_bound(n: int, p: float, K: float) -> float:
    """Upper bound ((n-1) K / p)**p on the first p-Laplacian eigenvalue."""
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    if not p > 1:
        raise ValueError(f"exponent p must be > 1, got {p}")
    if K < 0:
        raise ValueError(f"curvature scale must be >= 0, got {K}")
    return _rpow((n - 1) * K / p, p)


def cheng_bound(n: int, K: float) -> float:
    """Classical Laplacian (p = 2) upper bound (n-1)**2 K**2 / 4."""
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    if K < 0:
        raise ValueError(f"curvature scale must be >= 0, got {K}")
    return (n - 1) ** 2 * K**2 / 4.0


def _admissible_lambda(inp: SpectralInput) -> float:
    cap = eigen_upper_bound(inp.n, inp.p, inp.K)
    lam = inp.lam
    if lam > cap:
        if lam <= cap * (1.0 + _LAMBDA_CLAMP_REL):
            return cap
        raise ValueError(
            f"lam={lam} exceeds the eigenvalue cap {cap}; the gradient "
            "formulas are stated for admissible eigenvalues only"
        )
    return lam


def grad_bound_supercritical(inp: SpectralInput) -> BoundBreakdown:
    """Gradient bound on |grad h|**p for p > 2.

    Requires 0 <= lam <= eigen_upper_bound(n, p, K); values within a
    1e-12 relative overshoot of the cap are clamped to it.
    """
    n, p, K = inp.n, inp.p, inp.K
    if not p > 2:
        raise ValueError(f"supercritical formula needs p > 2, got {p}")
    lam = _admissible_lambda(inp)

    prefactor = (n - 1) * (p - 1) ** 2 / p
    linear = (
        -(p / (n - 1)) * _rpow(p - 1, p - 1) * lam
        + _rpow(n - 1, p - 1) * _rpow(K, p) * _rpow((p - 1) / p, p - 2)
    )
    sqrt_arg = (
        _rpow(p, 3) * _rpow(p - 1, 2 * (p - 1)) * lam**2 / ((n - 1) ** 2 * (p - 2))
        - 2.0 * _rpow(K, p) * _rpow(p - 1, 2 * p - 3) * _rpow(n - 1, p - 2) * lam
        / _rpow(p, p - 3)
        + _rpow(K, 2 * p) * _rpow(n - 1, 2 * (p - 1)) * _rpow((p - 1) / p, 2 * (p - 2))
    )
    return _finish(prefactor, linear, sqrt_arg)


def grad_bound_subcritical(inp: SpectralInput) -> BoundBreakdown:
    """Gradient bound on |grad h|**p for 1 < p < 2.

    Same admissibility contract as the supercritical formula.  At
    lam = eigen_upper_bound the sqrt_argument vanishes identically.
    """
    n, p, K = inp.n, inp.p, inp.K
    if not 1 < p < 2:
        raise ValueError(f"subcritical formula needs 1 < p < 2, got {p}")
    lam = _admissible_lambda(inp)

    prefactor = (n - 1) / p
    linear = (
        -(p / (n - 1)) * _rpow(p - 1, p - 1) * lam
        + _rpow(n - 1, p - 1) * _rpow(p, 2 - p) * _rpow(p - 1, p - 1) * _rpow(K, p)
    )
    sqrt_arg = (
        -2.0 * _rpow(p - 1, 2 * (p - 1)) * _rpow(p, 3 - p) * _rpow(K, p) * lam
        / _rpow(n - 1, 2 - p)
        + 2.0
        * _rpow(n - 1, 2 * (p - 1))
        * _rpow(p - 1, 2 * (p - 1))
        * _rpow(p, 3 - 2 * p)
        * _rpow(K, 2 * p)
    )
    return _finish(prefactor, linear, sqrt_arg)


def _finish(prefactor: float, linear: float, sqrt_arg: float) -> BoundBreakdown:
    # Roundoff at lam = cap can leave a tiny negative sqrt argument.
    if sqrt_arg < 0:
        scale = abs(linear) + abs(sqrt_arg)
        if abs(sqrt_arg) > 1e-10 * max(scale, 1e-300):
            raise ValueError(
                f"sqrt argument {sqrt_arg} is negative beyond roundoff; "
                "lam is outside the admissible range"
            )
        sqrt_arg = 0.0
    sqrt_value = math.sqrt(sqrt_arg)
    total = prefactor * (linear + sqrt_value)
    return BoundBreakdown(prefactor, linear, sqrt_arg, sqrt_value, total)


def p_harmonic_bound(n: int, p: float, K: float) -> float:
    """Bound on |grad h|**p for positive p-harmonic functions (lam = 0).

    p > 2:      (2 / p**(p-1)) * ((n-1)(p-1)K)**p
    1 < p < 2:  (1 + sqrt(2/p)) * ((p-1)/p)**(p-1) * ((n-1)K)**p
    p = 2:      ((n-1)K)**2, the common limit of both expressions.
    """
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    if not p > 1:
        raise ValueError(f"exponent p must be > 1, got {p}")
    if K < 0:
        raise ValueError(f"curvature scale must be >= 0, got {K}")
    if p == 2:
        return (n - 1) ** 2 * K**2
    if p > 2:
        return 2.0 / _rpow(p, p - 1) * _rpow((n - 1) * (p - 1) * K, p)
    return (1.0 + math.sqrt(2.0 / p)) * _rpow((p - 1) / p, p - 1) * _rpow((n - 1) * K, p)


def grad_bound(inp: SpectralInput) -> BoundBreakdown:
    """Dispatch to the regime-appropriate gradient bound (p != 2)."""
    if inp.p > 2:
        return grad_bound_supercritical(inp)
    return grad_bound_subcritical(inp)
