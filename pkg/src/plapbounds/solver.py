"""
Radial p-Laplacian eigenvalue solvers on geodesic balls.

Two independent routes to the first Dirichlet eigenvalue of
Delta_p u = -lam |u|**(p-2) u on a ball B(R) of a model space:

* ``dirichlet_eigenvalue`` -- nonlinear shooting.  The radial equation
  is integrated in the variables (u, v) with the p-momentum
  v = |u'|**(p-2) u', in which the ODE is first order and regular:

      u' = |v|**((2-p)/(p-1)) v,
      v' = -lam |u|**(p-2) u - m(r) v,

  m(r) the distance Laplacian.  The first zero of u moves continuously
  and monotonically with lam, so the eigenvalue is bracketed by
  bisection on "does u vanish before R".
* ``rayleigh_minimize`` -- direct minimisation of the discrete Rayleigh
  quotient int |u'|^p w / int |u|^p w over mesh functions vanishing at
  R.  Shares no code with the shooting path.

``interval_eigenvalue_1d`` solves the weight-free problem on an
interval (Dirichlet at both ends); its eigenvalues have the closed form
(p-1) (pi_p / L)**p, which validates the integrator end to end.

Profile post-processing (``h_and_G``, ``equation_residual``,
``sigma_ratio``, ``sup_gradient``) derives the log-gradient quantities
h = (p-1) log u and G = |h'|**p that the estimate checks consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import cho_solve_banded, cholesky_banded

from .bounds import _rpow, eigen_upper_bound
from .geometry import ModelSpace, _pow_sn, _weight_integral_near_zero

__all__ = [
    "SolverError",
    "RadialProfile",
    "EigenResult",
    "ShootResult",
    "pi_p",
    "shoot",
    "dirichlet_eigenvalue",
    "interval_eigenvalue_1d",
    "rayleigh_minimize",
    "rayleigh_minimize_interval",
    "h_and_G",
    "grad_h",
    "equation_residual",
    "sigma_ratio",
    "sup_gradient",
    "synthetic_exponential_profile",
]

_MAX_DOUBLINGS = 10
_STARTUP_FRACTION = 1e-6
_ODE_RTOL = 1e-10
_ODE_ATOL = 1e-30


class SolverError(RuntimeError):
    """Integration or iteration failure, with offending parameters."""


def pi_p(p: float) -> float:
    """Generalised half-period 2 pi / (p sin(pi/p)).

    The first Dirichlet eigenvalue of the 1-D p-Laplacian on (0, L) is
    (p-1) (pi_p / L)**p.
    """
    if not p > 1:
        raise ValueError(f"p must be > 1, got {p}")
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


@dataclass(frozen=True)
class RadialProfile:
    """Discretised radial solution on a uniform grid.

    r, u, v are equal-length arrays: radii, solution values, and the
    p-momentum v = |u'|**(p-2) u'.  Metadata (n, p, K, lam, R) records
    the problem solved; n = 1 with K = 0 marks the degenerate interval
    case (weight identically 1).
    """

    r: np.ndarray
    u: np.ndarray
    v: np.ndarray
    n: int
    p: float
    K: float
    lam: float
    R: float

    def __post_init__(self):
        if not (len(self.r) == len(self.u) == len(self.v)):
            raise ValueError("r, u, v must have equal length")
        if len(self.r) < 5:
            raise ValueError("profile needs at least 5 grid points")
        dr = np.diff(self.r)
        if np.any(dr <= 0):
            raise ValueError("radial grid must be strictly increasing")

    @property
    def dr(self) -> float:
        return float(self.r[1] - self.r[0])

    def u_prime(self) -> np.ndarray:
        """Recover u' = |v|**((2-p)/(p-1)) v from the p-momentum."""
        return _momentum_to_slope(self.v, self.p)

    def weight(self) -> np.ndarray:
        """Volume weight w(r) = sn_K(r)**(n-1) on the profile grid."""
        return _pow_sn(self.n, self.K, self.r)


class ShootResult(NamedTuple):
    profile: RadialProfile
    first_zero: Optional[float]


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalue solve outcome.

    lam is the eigenvalue estimate, bracket the final (lo, hi)
    enclosure (degenerate for the Rayleigh route), residual the maximum
    pointwise residual of the log-substituted equation on an interior
    window of the returned profile, iterations the solver step count.
    """

    lam: float
    bracket: Tuple[float, float]
    residual: float
    profile: RadialProfile
    iterations: int


def _momentum_to_slope(v: np.ndarray, p: float) -> np.ndarray:
    return np.sign(v) * np.abs(v) ** (1.0 / (p - 1.0))


def _make_rhs(n: int, p: float, K: float, lam: float):
    """Scalar right-hand side of the (u, v) system; m(r) inlined."""
    e = 1.0 / (p - 1.0)
    q = p - 1.0
    nm1 = n - 1.0

    def rhs(r, y):
        u, v = y
        du = math.copysign(abs(v) ** e, v) if v != 0.0 else 0.0
        if K == 0.0:
            m = nm1 / r
        else:
            x = K * r
            m = nm1 * K * (1.0 / math.tanh(x) if x <= 30.0 else 1.0)
        f = math.copysign(abs(u) ** q, u) if u != 0.0 else 0.0
        return (du, -lam * f - m * v)

    return rhs


def _rhs_interval(p: float, lam: float):
    e = 1.0 / (p - 1.0)
    q = p - 1.0

    def rhs(r, y):
        u, v = y
        du = math.copysign(abs(v) ** e, v) if v != 0.0 else 0.0
        f = math.copysign(abs(u) ** q, u) if u != 0.0 else 0.0
        return (du, -lam * f)

    return rhs


def _integrate(rhs, r0, R, y0, dense, rtol):
    event = lambda r, y: y[0]
    event.terminal = True
    event.direction = -1
    sol = solve_ivp(
        rhs,
        (r0, R),
        y0,
        method="DOP853",
        rtol=rtol,
        atol=_ODE_ATOL,
        events=[event],
        dense_output=dense,
    )
    if not sol.success and sol.status != 1:
        raise SolverError(f"integration failed on [{r0}, {R}]: {sol.message}")
    zero = float(sol.t_events[0][0]) if len(sol.t_events[0]) else None
    return sol, zero


def _default_grid_points(R: float) -> int:
    return max(4001, min(40001, int(800.0 * R) + 1))


def shoot(
    ms: ModelSpace,
    p: float,
    lam: float,
    R: float,
    rtol: float = _ODE_RTOL,
    n_grid: Optional[int] = None,
) -> ShootResult:
    """Integrate the radial equation at fixed lam and locate the first
    zero of u, if any occurs in (0, R].

    Starts from r0 = 1e-6 R with u(r0) = 1 and the p-momentum matched
    to the exact flux balance v(r0) = -lam * (int_0^r0 w) / w(r0); the
    origin itself is a singular point of the radial operator.  Returns
    the profile on a uniform grid over [r0, first_zero or R] and the
    zero location (None when u stays positive).
    """
    if not p > 1:
        raise ValueError(f"p must be > 1, got {p}")
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R}")
    r0 = _STARTUP_FRACTION * R
    y0 = _startup_state(ms, lam, r0)
    sol, zero = _integrate(_make_rhs(ms.n, p, ms.K, lam), r0, R, y0, True, rtol)
    r_end = zero if zero is not None else R
    npts = n_grid if n_grid is not None else _default_grid_points(R)
    grid = np.linspace(r0, r_end, npts)
    vals = sol.sol(grid)
    if not np.all(np.isfinite(vals)):
        raise SolverError(
            f"non-finite state in shoot(n={ms.n}, p={p}, K={ms.K}, "
            f"lam={lam}, R={R})"
        )
    profile = RadialProfile(grid, vals[0], vals[1], ms.n, p, ms.K, lam, R)
    return ShootResult(profile, zero)


def _startup_state(ms: ModelSpace, lam: float, r0: float):
    w0 = float(_pow_sn(ms.n, ms.K, np.asarray([r0]))[0])
    iw = _weight_integral_near_zero(ms.n, ms.K, r0)
    return (1.0, -lam * iw / w0)


def _first_zero(ms, p, lam, R, rtol) -> Optional[float]:
    r0 = _STARTUP_FRACTION * R
    y0 = _startup_state(ms, lam, r0)
    _, zero = _integrate(_make_rhs(ms.n, p, ms.K, lam), r0, R, y0, False, rtol)
    return zero


def _first_zero_interval(p, lam, L, rtol) -> Optional[float]:
    r0 = 1e-9 * L
    _, zero = _integrate(_rhs_interval(p, lam), r0, L, (r0, 1.0), False, rtol)
    return zero


def _bisect_eigenvalue(first_zero_fn, seed: float, R: float, tol: float):
    """Bisection on "first zero appears before R" over lam.

    Returns (lo, hi, iterations, observations); observations collects
    the (lam, zero) pairs seen, for the monotonicity cross-check.
    """
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    observations = []
    iterations = 0

    def has_zero(lam):
        nonlocal iterations
        iterations += 1
        zero = first_zero_fn(lam)
        if zero is not None:
            observations.append((lam, zero))
        return zero is not None

    lo = 0.0  # constants are p-harmonic: no zero at lam = 0
    hi = seed
    doublings = 0
    while not has_zero(hi):
        lo = hi
        hi *= 2.0
        doublings += 1
        if doublings > _MAX_DOUBLINGS:
            raise SolverError(
                f"bracketing failure: no zero before R={R} after "
                f"{_MAX_DOUBLINGS} doublings from seed {seed}"
            )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if has_zero(mid):
            hi = mid
        else:
            lo = mid
    _check_zero_monotonicity(observations)
    return lo, hi, iterations, observations


def _check_zero_monotonicity(observations):
    """The first-zero radius must decrease as lam grows; a violation
    indicates a lost zero crossing and poisons the bisection."""
    obs = sorted(observations)
    for (lam_a, za), (lam_b, zb) in zip(obs, obs[1:]):
        if lam_b > lam_a * (1.0 + 1e-12) and zb > za * (1.0 + 1e-9):
            raise SolverError(
                "first-zero location failed to decrease in lam: "
                f"({lam_a}, {za}) -> ({lam_b}, {zb})"
            )


def dirichlet_eigenvalue(
    ms: ModelSpace,
    p: float,
    R: float,
    tol: float = 1e-8,
    rtol: float = _ODE_RTOL,
    n_grid: Optional[int] = None,
) -> EigenResult:
    """First Dirichlet eigenvalue of the ball B(R) by shooting.

    Bisects lam until the bracket is narrower than tol (absolute); the
    upper bracket end is found by doubling from the closed-form bound
    ((n-1)K/p)**p (from the flat 1-D scale (p-1)(pi_p/R)**p when the
    bound is zero).  The returned profile is the lam = hi shot, whose
    first zero lies within the bracket's resolution of R.
    """
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R}")
    seed = eigen_upper_bound(ms.n, p, ms.K)
    if seed == 0.0:
        seed = (p - 1.0) * (pi_p(p) / R) ** p
    lo, hi, iters, _ = _bisect_eigenvalue(
        lambda lam: _first_zero(ms, p, lam, R, rtol), seed, R, tol
    )
    profile, zero = shoot(ms, p, hi, R, rtol=rtol, n_grid=n_grid)
    if zero is None:
        raise SolverError(f"no zero at bracketed lam={hi}; tol too loose?")
    return EigenResult(
        lam=0.5 * (lo + hi),
        bracket=(lo, hi),
        residual=_interior_residual(profile),
        profile=profile,
        iterations=iters,
    )


def interval_eigenvalue_1d(
    p: float,
    L: float,
    tol: float = 1e-8,
    rtol: float = _ODE_RTOL,
    n_grid: Optional[int] = None,
) -> EigenResult:
    """First Dirichlet eigenvalue of (0, L) with unit weight.

    Validation oracle: the exact value is (p-1) (pi_p / L)**p.  The
    shot starts at u = 0 with unit p-momentum (u' = 1).
    """
    if not L > 0:
        raise ValueError(f"L must be > 0, got {L}")
    seed = (p - 1.0) * (pi_p(p) / L) ** p / 2.0
    lo, hi, iters, _ = _bisect_eigenvalue(
        lambda lam: _first_zero_interval(p, lam, L, rtol), seed, L, tol
    )
    r0 = 1e-9 * L
    sol, zero = _integrate(_rhs_interval(p, hi), r0, L, (r0, 1.0), True, rtol)
    r_end = zero if zero is not None else L
    npts = n_grid if n_grid is not None else _default_grid_points(L)
    grid = np.linspace(r0, r_end, npts)
    vals = sol.sol(grid)
    profile = RadialProfile(grid, vals[0], vals[1], 1, p, 0.0, hi, L)
    # residual window dodges both zeros of u and its interior maximum
    res = equation_residual(profile, 0.2 * L, 0.4 * L)
    return EigenResult(0.5 * (lo + hi), (lo, hi), res, profile, iters)


def _interior_residual(profile: RadialProfile) -> float:
    span = profile.r[-1] - profile.r[0]
    return equation_residual(
        profile, profile.r[0] + 0.1 * span, profile.r[0] + 0.9 * span
    )


# ----------------------------------------------------------------------
# Rayleigh-quotient route (independent of the shooting code)
# ----------------------------------------------------------------------


def rayleigh_minimize(
    ms: ModelSpace,
    p: float,
    R: float,
    mesh_size: int = 2000,
    quotient_tol: float = 1e-10,
    max_iter: int = 200_000,
) -> EigenResult:
    """Minimise the discrete radial Rayleigh quotient on B(R).

    Mesh functions vanish at R; the centre value is free (natural
    boundary condition).  Preconditioned projected descent with p-norm
    renormalisation each step; stops when the quotient changes by less
    than quotient_tol relatively over three consecutive steps.
    """
    if mesh_size < 100:
        raise ValueError(f"mesh_size must be >= 100, got {mesh_size}")
    if not R > 0:
        raise ValueError(f"R must be > 0, got {R}")
    grid = np.linspace(0.0, R, mesh_size + 1)
    w_node = _pow_sn(ms.n, ms.K, grid)
    w_mid = _pow_sn(ms.n, ms.K, 0.5 * (grid[:-1] + grid[1:]))
    u0 = 1.0 - (grid / R) ** 2
    lam, u, iters = _rayleigh_descent(
        u0, grid, w_node, w_mid, p, dirichlet_left=False,
        quotient_tol=quotient_tol, max_iter=max_iter,
    )
    profile = _profile_from_mesh(grid, u, ms.n, p, ms.K, lam, R)
    return EigenResult(lam, (lam, lam), _interior_residual(profile), profile, iters)


def rayleigh_minimize_interval(
    p: float,
    L: float,
    mesh_size: int = 2000,
    quotient_tol: float = 1e-10,
    max_iter: int = 200_000,
) -> EigenResult:
    """Unit-weight interval version of rayleigh_minimize (Dirichlet at
    both ends); cross-checks the 1-D closed form."""
    if mesh_size < 100:
        raise ValueError(f"mesh_size must be >= 100, got {mesh_size}")
    grid = np.linspace(0.0, L, mesh_size + 1)
    ones_n = np.ones_like(grid)
    ones_m = np.ones(mesh_size)
    u0 = np.sin(math.pi * grid / L)
    lam, u, iters = _rayleigh_descent(
        u0, grid, ones_n, ones_m, p, dirichlet_left=True,
        quotient_tol=quotient_tol, max_iter=max_iter,
    )
    profile = _profile_from_mesh(grid, u, 1, p, 0.0, lam, L)
    res = equation_residual(profile, 0.2 * L, 0.4 * L)
    return EigenResult(lam, (lam, lam), res, profile, iters)


def _profile_from_mesh(grid, u, n, p, K, lam, R):
    # p-momentum from centred slopes; one-sided at the ends
    du = np.gradient(u, grid)
    v = np.sign(du) * np.abs(du) ** (p - 1.0)
    keep = slice(1, None)  # drop r = 0 (singular point of the weight)
    return RadialProfile(grid[keep], u[keep], v[keep], n, p, K, lam, R)


def _rayleigh_descent(u0, grid, w_node, w_mid, p, dirichlet_left, quotient_tol, max_iter):
    dr = float(grid[1] - grid[0])
    n_nodes = len(grid)
    trap = np.ones(n_nodes)
    trap[0] = trap[-1] = 0.5
    mass_w = trap * w_node * dr
    free_lo = 1 if dirichlet_left else 0

    def split(u):
        d = np.diff(u) / dr
        return d

    def energy_mass(u):
        d = split(u)
        E = float(np.sum(np.abs(d) ** p * w_mid) * dr)
        M = float(np.sum(np.abs(u) ** p * mass_w))
        return E, M

    def normalize(u):
        _, M = energy_mass(u)
        return u / M ** (1.0 / p)

    def quotient_grad(u):
        d = split(u)
        E = float(np.sum(np.abs(d) ** p * w_mid) * dr)
        M = float(np.sum(np.abs(u) ** p * mass_w))
        Q = E / M
        phi = np.sign(d) * np.abs(d) ** (p - 1.0) * w_mid
        gE = np.zeros(n_nodes)
        gE[:-1] -= phi
        gE[1:] += phi
        gE *= p
        gM = p * np.sign(u) * np.abs(u) ** (p - 1.0) * mass_w
        g = (gE - Q * gM) / M
        g[-1] = 0.0
        if dirichlet_left:
            g[0] = 0.0
        return Q, g

    # Banded Cholesky of the p = 2 stiffness (+ small mass shift) as a
    # fixed preconditioner; without it plain descent needs ~1/dr^2 steps.
    n_free = n_nodes - 1 - free_lo
    diag = np.zeros(n_free)
    sub = np.zeros(n_free)
    for k in range(n_free):
        j = k + free_lo
        left = w_mid[j - 1] if j >= 1 else 0.0
        diag[k] = (left + w_mid[j]) / dr
        if k + 1 < n_free:
            sub[k] = -w_mid[j + 1 - 1] / dr
    diag += 1e-12 * np.max(diag)
    ab = np.zeros((2, n_free))
    ab[0] = diag
    ab[1, :-1] = sub[:-1]
    chol = cholesky_banded(ab, lower=True)

    u = normalize(np.array(u0, dtype=float))
    Q, g = quotient_grad(u)
    step = 1.0
    stall = 0
    iterations = 0
    for iterations in range(1, max_iter + 1):
        d_free = cho_solve_banded((chol, True), g[free_lo:-1])
        direction = np.zeros(n_nodes)
        direction[free_lo:-1] = d_free
        accepted = False
        eta = step
        for _ in range(60):
            u_try = normalize(u - eta * direction)
            E_try, M_try = energy_mass(u_try)
            Q_try = E_try / M_try
            if Q_try < Q:
                accepted = True
                break
            eta *= 0.25
        if not accepted:
            stall += 1
            if stall >= 3:
                break
            step = max(step * 0.25, 1e-12)
            continue
        rel_drop = (Q - Q_try) / max(Q_try, 1e-300)
        u = u_try
        Q = Q_try
        _, g = quotient_grad(u)
        step = min(eta * 2.0, 1e6)
        if rel_drop < quotient_tol:
            stall += 1
            if stall >= 3:
                break
        else:
            stall = 0
    else:
        raise SolverError(
            f"Rayleigh descent did not converge in {max_iter} iterations; "
            f"last quotient {Q}"
        )
    return Q, np.abs(u) if np.min(u) < 0 else u, iterations


# ----------------------------------------------------------------------
# Profile diagnostics
# ----------------------------------------------------------------------


def grad_h(profile: RadialProfile) -> np.ndarray:
    """h'(r) = (p-1) u'/u on the profile grid (requires u > 0)."""
    if np.any(profile.u <= 0):
        raise ValueError("u must be positive to form h = (p-1) log u")
    return (profile.p - 1.0) * profile.u_prime() / profile.u


def h_and_G(profile: RadialProfile):
    """Log-substituted solution h = (p-1) log u and G = |h'|**p."""
    if np.any(profile.u <= 0):
        raise ValueError("u must be positive to form h = (p-1) log u")
    h = (profile.p - 1.0) * np.log(profile.u)
    G = np.abs(grad_h(profile)) ** profile.p
    return h, G


def _slice_for_range(r: np.ndarray, r_lo: float, r_hi: float) -> slice:
    i0 = int(np.searchsorted(r, r_lo, side="left"))
    i1 = int(np.searchsorted(r, r_hi, side="right"))
    if i1 - i0 < 5:
        raise ValueError(f"window [{r_lo}, {r_hi}] covers fewer than 5 grid points")
    return slice(i0, i1)


def equation_residual(
    profile: RadialProfile, r_lo: Optional[float] = None, r_hi: Optional[float] = None
) -> float:
    """Max residual of Delta_p h + |h'|**p + (p-1)**(p-1) lam = 0.

    Delta_p h is discretised as central differences of w |h'|**(p-2) h'
    divided by w, so the returned value mixes equation error with
    O(dr^2) discretisation error.  The window must keep away from the
    centre (h' = 0 degenerates |h'|**(p-2) for p < 2) and from any zero
    of u; it defaults to the middle 80% of the grid.
    """
    r = profile.r
    span = r[-1] - r[0]
    if r_lo is None:
        r_lo = r[0] + 0.1 * span
    if r_hi is None:
        r_hi = r[0] + 0.9 * span
    if r_lo <= r[0] or r_lo >= r_hi:
        raise ValueError(f"invalid window [{r_lo}, {r_hi}]")
    sl = _slice_for_range(r, r_lo, r_hi)
    lo = max(sl.start - 1, 0)
    hi = min(sl.stop + 1, len(r))
    if np.any(profile.u[lo:hi] <= 0):
        raise ValueError("u must be positive on the residual window")
    up = profile.u_prime()[lo:hi]
    if np.any(up == 0):
        raise ValueError("u' must be nonzero on the residual window")
    p, lam = profile.p, profile.lam
    hp = (p - 1.0) * up / profile.u[lo:hi]
    w = _pow_sn(profile.n, profile.K, r[lo:hi])
    flux = w * np.sign(hp) * np.abs(hp) ** (p - 1.0)
    dr = profile.dr
    lap = (flux[2:] - flux[:-2]) / (2.0 * dr) / w[1:-1]
    res = lap + np.abs(hp[1:-1]) ** p + _rpow(p - 1.0, p - 1.0) * lam
    return float(np.max(np.abs(res)))


def sigma_ratio(profile: RadialProfile, R: Optional[float] = None) -> float:
    """sup of G over the half ball divided by its sup over the full ball.

    Defined as 1 when the full-ball sup vanishes (constant solutions).
    """
    if R is None:
        R = profile.R
    if np.any(profile.u[profile.r <= R] <= 0):
        raise ValueError("sigma ratio needs u > 0 on [0, R]")
    _, G = h_and_G(profile)
    full = G[profile.r <= R]
    half = G[profile.r <= 0.5 * R]
    if not len(full) or not len(half):
        raise ValueError("profile grid does not cover the half ball")
    denom = float(np.max(full))
    if denom < 1e-300:
        return 1.0
    return float(np.max(half)) / denom


def sup_gradient(profile: RadialProfile, fraction: float) -> float:
    """sup of G = |h'|**p over the sub-ball of radius fraction * R."""
    if not 0 < fraction <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    _, G = h_and_G(profile)
    mask = profile.r <= fraction * profile.R
    return float(np.max(G[mask])) if np.any(mask) else 0.0


def synthetic_exponential_profile(
    n: int, p: float, K: float, r_lo: float, r_hi: float, num: int = 4001
) -> RadialProfile:
    """Reference profile u = exp(-(n-1) K r / p) on [r_lo, r_hi].

    Solves the eigenvalue equation at lam = ((n-1)K/p)**p up to the
    coth(K r) - 1 defect, which decays like exp(-2 K r); its G is
    constant, which makes it the sharp-regime test profile.
    """
    if not 0 < r_lo < r_hi:
        raise ValueError(f"need 0 < r_lo < r_hi, got [{r_lo}, {r_hi}]")
    r = np.linspace(r_lo, r_hi, num)
    c = (n - 1) * K / p
    u = np.exp(-c * r)
    v = -((c * u) ** (p - 1.0)) if c > 0 else np.zeros_like(u)
    lam = _rpow((n - 1) * K / p, p)
    return RadialProfile(r, u, v, n, p, K, lam, r_hi)
