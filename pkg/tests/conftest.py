import pytest

import plapbounds as pb
from plapbounds.lemma import GateError, check_in5
from plapbounds.solver import shoot

# Cells shared by the gradient-estimate and inequality acceptance checks:
# positive solutions at lam = 0.9 * bound on hyperbolic balls of radius 40.
PROFILE_CELLS = [(2, 1.5), (2, 2.5), (2, 3.0), (3, 1.5), (3, 2.5), (3, 3.0)]
_GRID_LADDER = (2001, 4001, 8001, 16001)


@pytest.fixture(scope="session")
def gradient_profiles():
    """Base and 2x-refined profiles per cell, integrated tightly enough
    (rtol 1e-12) that interpolation noise stays below the inequality
    check's discretisation error.

    The base grid is the coarsest ladder entry that passes the
    equation-residual gate of check_in5, so refinement probes genuine
    discretisation behaviour.
    """
    out = {}
    for n, p in PROFILE_CELLS:
        ms = pb.ModelSpace(n, 1.0)
        lam = 0.9 * pb.eigen_upper_bound(n, p, 1.0)
        base = None
        for n_grid in _GRID_LADDER:
            prof, zero = shoot(ms, p, lam, 40.0, rtol=1e-12, n_grid=n_grid)
            assert zero is None, f"positive solution vanished at n={n}, p={p}"
            try:
                check_in5(prof)
            except GateError:
                continue
            base = prof
            break
        assert base is not None, f"no ladder grid passed the gate at n={n}, p={p}"
        refined, _ = shoot(
            ms, p, lam, 40.0, rtol=1e-12, n_grid=2 * (len(base.r) - 1) + 1
        )
        out[(n, p)] = (base, refined, lam)
    return out
