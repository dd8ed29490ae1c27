import json

import numpy as np
import pytest

from main.core.regularity import Distribution, Regularity, ThetaGrid, unique_members


@pytest.fixture
def two_state_grid():
    return ThetaGrid((0.04, 0.06))


@pytest.fixture
def two_dirac(two_state_grid):
    """The good and the bad ROI scenario as point masses."""
    return Regularity(two_state_grid,
                      (Distribution.dirac(two_state_grid, 0), Distribution.dirac(two_state_grid, 1)),
                      label="good-or-bad")


@pytest.fixture
def rng():
    return np.random.default_rng(20121017)


@pytest.fixture
def make_random_regularity():
    def make(rng, number_of_states=None, number_of_members=None, low=-0.1, high=0.1):
        number_of_states = number_of_states or int(rng.integers(1, 8))
        number_of_members = number_of_members or int(rng.integers(1, 6))

        states = np.unique(rng.uniform(low, high, number_of_states))
        grid = ThetaGrid(tuple(states.tolist()))
        members = [Distribution(grid, tuple(rng.dirichlet(np.ones(len(grid))).tolist()))
                   for _ in range(number_of_members)]

        return Regularity(grid, unique_members(members))

    return make


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
