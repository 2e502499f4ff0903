"""
plapbounds: eigenvalue upper bounds and gradient estimates for the
p-Laplacian on constant-curvature model spaces, together with the
numerical machinery that verifies them.

Layers, from closed forms to checks:

* ``geometry``    -- model spaces and radial coefficients.
* ``bounds``      -- closed-form eigenvalue / gradient bounds.
* ``certificate`` -- finite-radius certificate chain and its
                     eps3 optimisation.
* ``solver``      -- shooting and Rayleigh-quotient eigenvalue solvers
                     on geodesic balls, plus profile diagnostics.
* ``lemma``       -- pointwise check of the differential inequality
                     the estimates rest on.
* ``suites``      -- named verification suites over all of the above.
* ``cli``         -- command-line interface (bounds, eigen, sweep,
                     verify, limit-check).
"""

from .bounds import (
    BoundBreakdown,
    SpectralInput,
    cheng_bound,
    eigen_upper_bound,
    grad_bound,
    grad_bound_subcritical,
    grad_bound_supercritical,
    p_harmonic_bound,
)
from .certificate import (
    CertificateError,
    CertificateSub,
    CertificateSuper,
    FiniteRContext,
    abc_supercritical,
    abcd_subcritical,
    cutoff_D,
    cutoff_Dbar,
    eps3_star_subcritical,
    eps3_star_supercritical,
    finite_R_bound_subcritical,
    finite_R_bound_supercritical,
    quadratic_upper_root,
)
from .geometry import ModelSpace, distance_laplacian, volume_weight, warping
from .lemma import LemmaReport, alpha, check_in5, discrete_L_of_G, in5_rhs
from .solver import (
    EigenResult,
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

__version__ = "0.1.0"
