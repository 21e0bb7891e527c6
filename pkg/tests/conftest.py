import numpy as np
import pytest

from charpoisson import liealg, representation, surface

# Recorded scenario seeds: first seed at which the random representation is
# good and boundary-regular (found by running the reseeding policy once).
SCENARIO_SEEDS = {
    ("SU2", 1, 1): 7,
    ("SU2", 0, 3): 11,
    ("SU2", 1, 2): 5,
    ("SU2", 2, 1): 3,
    ("SL2R", 1, 1): 7,
    ("SL2C", 1, 1): 7,
}

SU2_SCENARIOS = [(1, 1), (0, 3), (1, 2), (2, 1)]


def scenario_rep(family, g, m, seed=None):
    spec = liealg.make_spec(family)
    p = surface.build_presentation(g, m)
    if seed is None:
        seed = SCENARIO_SEEDS[(family, g, m)]
    rho, cert, _ = representation.good_random_representation(
        p, spec, seed, require_boundary_regular=True
    )
    return rho, cert


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240811)
