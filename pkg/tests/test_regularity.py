import math

import numpy as np
import pytest

from main.core.regularity import (
    Distribution,
    Regularity,
    ThetaGrid,
    convex_samples,
    dirac_family,
    empirical_regularity,
    expectation,
    identity,
    max_expectation,
    min_expectation,
    regularity_from_payload,
    regularity_to_payload,
)
from main.errors import (
    EmptySamples,
    InvalidDistribution,
    InvalidGrid,
    InvalidRegularity,
    InvalidWindow,
    WindowTooLarge,
)


class TestThetaGrid:
    def test_rejects_empty_grid(self):
        with pytest.raises(InvalidGrid):
            ThetaGrid(())

    @pytest.mark.parametrize("states", [(0.06, 0.04), (0.04, 0.04), (0.0, math.nan), (0.0, math.inf)])
    def test_rejects_unordered_or_non_finite_states(self, states):
        with pytest.raises(InvalidGrid):
            ThetaGrid(states)

    def test_index_of(self, two_state_grid):
        assert two_state_grid.index_of(0.06) == 1
        with pytest.raises(InvalidGrid):
            two_state_grid.index_of(0.05)


class TestDistribution:
    def test_rejects_wrong_length(self, two_state_grid):
        with pytest.raises(InvalidDistribution):
            Distribution(two_state_grid, (1.0,))

    def test_rejects_negative_weight(self, two_state_grid):
        with pytest.raises(InvalidDistribution):
            Distribution(two_state_grid, (1.5, -0.5))

    def test_rejects_weights_far_from_one(self, two_state_grid):
        with pytest.raises(InvalidDistribution):
            Distribution(two_state_grid, (0.5, 0.4))

    def test_renormalizes_round_off(self, two_state_grid):
        dist = Distribution(two_state_grid, (0.5 + 5e-10, 0.5))

        assert math.fsum(dist.weights) == pytest.approx(1.0, abs=1e-12)

    def test_keeps_exact_weights_untouched(self, two_state_grid):
        assert Distribution(two_state_grid, (0.1, 0.9)).weights == (0.1, 0.9)


class TestExpectation:
    def test_uniform_is_midpoint(self, two_state_grid):
        assert expectation(Distribution.uniform(two_state_grid), identity) == pytest.approx(0.05, abs=1e-12)

    def test_dirac_is_point(self, two_state_grid):
        assert expectation(Distribution.dirac(two_state_grid, 1), identity) == 0.06

    def test_weighted_sum(self, two_state_grid):
        assert expectation(Distribution(two_state_grid, (0.25, 0.75)), identity) == pytest.approx(0.055, abs=1e-12)

    def test_affine_functions(self, rng, make_random_regularity):
        for _ in range(200):
            reg = make_random_regularity(rng)
            a, b = rng.uniform(-10, 10, 2)
            for member in reg.members:
                affine = expectation(member, lambda theta: a * theta + b)
                assert affine == pytest.approx(a * expectation(member, identity) + b, abs=1e-12)


class TestMinMaxExpectation:
    def test_min_picks_bad_state(self, two_dirac):
        assert min_expectation(two_dirac, identity) == (0.04, 0)

    def test_max_picks_good_state(self, two_dirac):
        assert max_expectation(two_dirac, identity) == (0.06, 1)

    def test_singleton_family(self, two_state_grid):
        reg = Regularity(two_state_grid, (Distribution(two_state_grid, (0.25, 0.75)),))

        assert min_expectation(reg)[0] == pytest.approx(0.055, abs=1e-12)
        assert max_expectation(reg)[0] == pytest.approx(0.055, abs=1e-12)

    def test_constant_function(self, two_dirac):
        value, index = max_expectation(two_dirac, lambda theta: 3.0)

        assert value == 3.0
        assert index == 0

    def test_ties_resolve_to_first_member(self, two_state_grid):
        reg = Regularity(two_state_grid, (Distribution.dirac(two_state_grid, 0), Distribution.dirac(two_state_grid, 1)))

        assert min_expectation(reg, lambda theta: 1.0)[1] == 0

    def test_bounds_every_member(self, rng, make_random_regularity):
        for _ in range(200):
            reg = make_random_regularity(rng)
            lowest, argmin = min_expectation(reg)
            highest, argmax = max_expectation(reg)

            for member in reg.members:
                assert lowest - 1e-15 <= expectation(member) <= highest + 1e-15
            assert expectation(reg.members[argmin]) == pytest.approx(lowest, abs=1e-15)
            assert expectation(reg.members[argmax]) == pytest.approx(highest, abs=1e-15)


class TestDiracFamily:
    def test_members_in_grid_order(self, two_state_grid):
        reg = dirac_family(two_state_grid)

        assert [member.weights for member in reg.members] == [(1.0, 0.0), (0.0, 1.0)]

    def test_cardinality(self):
        grid = ThetaGrid(tuple(i / 100 for i in range(11)))

        assert len(dirac_family(grid)) == 11

    def test_min_expectation_is_min_state(self):
        grid = ThetaGrid(tuple(i / 100 for i in range(11)))

        assert min_expectation(dirac_family(grid)) == (0.0, 0)


class TestEmpiricalRegularity:
    def test_constant_series(self):
        reg = empirical_regularity([0.05] * 6, window=3, stride=1)

        assert reg.grid.states == (0.05,)
        assert [member.weights for member in reg.members] == [(1.0,)]

    def test_single_window_is_full_frequency(self):
        samples = [0.04, 0.06, 0.06, 0.02]
        reg = empirical_regularity(samples, window=len(samples))

        assert reg.grid.states == (0.02, 0.04, 0.06)
        assert reg.members[0].weights == (0.25, 0.25, 0.5)

    def test_disjoint_windows(self):
        reg = empirical_regularity([0.04, 0.04, 0.06, 0.06], window=2, stride=2)

        assert reg.grid.states == (0.04, 0.06)
        assert [member.weights for member in reg.members] == [(1.0, 0.0), (0.0, 1.0)]

    def test_duplicate_windows_collapse(self):
        reg = empirical_regularity([0.04, 0.06, 0.04, 0.06, 0.04, 0.06], window=2, stride=2)

        assert [member.weights for member in reg.members] == [(0.5, 0.5)]

    def test_member_count_bounded_by_window_positions(self, rng):
        samples = rng.normal(0.05, 0.02, 50).round(3).tolist()
        reg = empirical_regularity(samples, window=10, stride=3)

        assert 1 <= len(reg) <= len(range(0, 50 - 10 + 1, 3))
        for member in reg.members:
            assert math.fsum(member.weights) == pytest.approx(1.0, abs=1e-12)

    def test_empty_samples(self):
        with pytest.raises(EmptySamples):
            empirical_regularity([], window=1)

    def test_window_too_large(self):
        with pytest.raises(WindowTooLarge):
            empirical_regularity([0.01, 0.02], window=3)

    def test_non_positive_stride(self):
        with pytest.raises(InvalidWindow):
            empirical_regularity([0.01, 0.02], window=1, stride=0)


class TestConvexSamples:
    def test_singleton_family_gives_copies(self, two_state_grid):
        member = Distribution(two_state_grid, (0.25, 0.75))
        samples = convex_samples(Regularity(two_state_grid, (member,)), count=5, seed=1)

        assert len(samples) == 5
        assert all(sample.is_close_to(member) for sample in samples)

    def test_even_mixing_is_average(self, two_dirac):
        samples = convex_samples(two_dirac, count=3, seed=0, mixing_sampler=lambda size: np.full(size, 1 / size))

        assert all(sample.weights == (0.5, 0.5) for sample in samples)

    def test_same_seed_same_samples(self, rng, make_random_regularity):
        reg = make_random_regularity(rng, number_of_states=4, number_of_members=3)

        assert convex_samples(reg, 10, seed=7) == convex_samples(reg, 10, seed=7)

    def test_samples_stay_inside_expectation_band(self, rng, make_random_regularity):
        for case in range(100):
            reg = make_random_regularity(rng)
            lowest, highest = reg.expectation_band()

            for sample in convex_samples(reg, count=20, seed=case):
                assert math.fsum(sample.weights) == pytest.approx(1.0, abs=1e-12)
                assert lowest - 1e-12 <= expectation(sample) <= highest + 1e-12


class TestRegularity:
    def test_rejects_empty_family(self, two_state_grid):
        with pytest.raises(InvalidRegularity):
            Regularity(two_state_grid, ())

    def test_rejects_duplicates(self, two_state_grid):
        member = Distribution.dirac(two_state_grid, 0)

        with pytest.raises(InvalidRegularity):
            Regularity(two_state_grid, (member, member))

    def test_rejects_foreign_grid(self, two_state_grid):
        other = ThetaGrid((0.01, 0.02))

        with pytest.raises(InvalidRegularity):
            Regularity(two_state_grid, (Distribution.dirac(other, 0),))

    def test_union_skips_duplicates(self, two_dirac, two_state_grid):
        extended = two_dirac.union([Distribution.dirac(two_state_grid, 1), Distribution.uniform(two_state_grid)])

        assert len(extended) == 3
        assert extended.label == two_dirac.label


class TestPayload:
    def test_round_trip_is_bit_faithful(self):
        payload = {"states": [-0.001, 0.002, 0.1], "members": [[0.1, 0.2, 0.7], [1.0, 0.0, 0.0]], "label": "q"}

        assert regularity_to_payload(regularity_from_payload(payload)) == payload

    @pytest.mark.parametrize("payload", [
        [],
        {"states": [0.04, 0.06]},
        {"states": "0.04", "members": [[1, 0]]},
        {"states": [0.04, 0.06], "members": [["a", 1]]},
        {"states": [0.04, 0.06], "members": [[0.5, 0.6]]},
        {"states": [0.06, 0.04], "members": [[1, 0]]},
        {"states": [0.04, 0.06], "members": [[1, 0]], "label": 3},
        {"states": [0.04, 0.06], "members": []},
    ])
    def test_rejects_malformed_payload(self, payload):
        with pytest.raises((InvalidRegularity, InvalidGrid, InvalidDistribution)):
            regularity_from_payload(payload)
