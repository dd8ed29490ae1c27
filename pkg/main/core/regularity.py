"""
State grids, distributions over them and statistical regularities.

A statistical regularity is a finite family of probability vectors on one
finite grid of ROI states. Every criterion built on top of it is linear in
the distribution, so the family is stored by its generators only: the
minimum and maximum of a linear functional over the closed convex hull are
attained at members of the family.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from ..errors import (
    EmptySamples,
    InvalidDistribution,
    InvalidGrid,
    InvalidRegularity,
    InvalidWindow,
    WindowTooLarge,
)

WEIGHT_SUM_TOLERANCE = 1e-12
RENORMALIZE_TOLERANCE = 1e-9
MEMBER_EQUALITY_TOLERANCE = 1e-12

StateFunction = Callable[[float], float]


def identity(theta: float) -> float:
    return theta


@dataclass(frozen=True)
class ThetaGrid:
    """Ordered finite set of ROI states, decimal rates (0.06 means 6%)."""

    states: tuple[float, ...]

    def __post_init__(self):
        states = tuple(float(state) for state in self.states)
        if not states:
            raise InvalidGrid("State grid must contain at least one state")
        if not all(math.isfinite(state) for state in states):
            raise InvalidGrid(f"State grid contains non-finite values: {states}")
        if any(left >= right for left, right in zip(states, states[1:])):
            raise InvalidGrid(f"States must be strictly increasing: {states}")
        object.__setattr__(self, "states", states)

    def __len__(self):
        return len(self.states)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.states, dtype=float)

    def index_of(self, value: float) -> int:
        try:
            return self.states.index(float(value))
        except ValueError:
            raise InvalidGrid(f"State {value} is not on the grid {self.states}") from None

    def values_of(self, f: StateFunction) -> np.ndarray:
        return np.asarray([f(state) for state in self.states], dtype=float)


@dataclass(frozen=True)
class Distribution:
    grid: ThetaGrid
    weights: tuple[float, ...]

    def __post_init__(self):
        weights = tuple(float(weight) for weight in self.weights)

        if len(weights) != len(self.grid):
            raise InvalidDistribution(f"Expected {len(self.grid)} weights, got {len(weights)}")
        if not all(math.isfinite(weight) for weight in weights):
            raise InvalidDistribution(f"Weights must be finite: {weights}")
        if any(weight < 0 for weight in weights):
            raise InvalidDistribution(f"Weights must be non-negative: {weights}")

        total = math.fsum(weights)
        if abs(total - 1.0) > RENORMALIZE_TOLERANCE:
            raise InvalidDistribution(f"Weights must sum to 1, got {total}")
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            logging.debug(f"Renormalizing weights with sum {total!r}")
            weights = tuple(weight / total for weight in weights)

        object.__setattr__(self, "weights", weights)

    @classmethod
    def dirac(cls, grid: ThetaGrid, index: int) -> "Distribution":
        if not 0 <= index < len(grid):
            raise InvalidDistribution(f"Dirac index {index} is outside of grid with {len(grid)} states")
        return cls(grid, tuple(1.0 if i == index else 0.0 for i in range(len(grid))))

    @classmethod
    def uniform(cls, grid: ThetaGrid) -> "Distribution":
        return cls(grid, (1.0 / len(grid),) * len(grid))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def expect(self, values: np.ndarray) -> float:
        return float(np.dot(self.as_array(), values))

    def mean(self) -> float:
        return self.expect(self.grid.as_array())

    def is_close_to(self, other: "Distribution", tolerance: float = MEMBER_EQUALITY_TOLERANCE) -> bool:
        return self.grid == other.grid and all(
            abs(left - right) <= tolerance for left, right in zip(self.weights, other.weights)
        )


@dataclass(frozen=True)
class Regularity:
    grid: ThetaGrid
    members: tuple[Distribution, ...]
    label: str = field(default="")

    def __post_init__(self):
        members = tuple(self.members)

        if not members:
            raise InvalidRegularity("Regularity must contain at least one distribution")
        for position, member in enumerate(members):
            if member.grid != self.grid:
                raise InvalidRegularity(f"Member {position} is defined on a different grid")
            for earlier in range(position):
                if member.is_close_to(members[earlier]):
                    raise InvalidRegularity(f"Member {position} duplicates member {earlier}")

        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def weights_matrix(self) -> np.ndarray:
        return np.asarray([member.weights for member in self.members], dtype=float)

    def member_expectations(self, values: np.ndarray) -> np.ndarray:
        return self.weights_matrix() @ values

    def expectation_band(self, f: StateFunction = identity) -> tuple[float, float]:
        expectations = self.member_expectations(self.grid.values_of(f))
        return float(expectations.min()), float(expectations.max())

    def union(self, extra: Iterable[Distribution], label: str | None = None) -> "Regularity":
        return Regularity(self.grid,
                          unique_members([*self.members, *extra]),
                          label=self.label if label is None else label)


def unique_members(distributions: Sequence[Distribution]) -> tuple[Distribution, ...]:
    kept = []
    for distribution in distributions:
        if not any(distribution.is_close_to(existing) for existing in kept):
            kept.append(distribution)
    return tuple(kept)


def expectation(dist: Distribution, f: StateFunction = identity) -> float:
    return dist.expect(dist.grid.values_of(f))


def min_expectation(reg: Regularity, f: StateFunction = identity) -> tuple[float, int]:
    expectations = reg.member_expectations(reg.grid.values_of(f))
    index = int(np.argmin(expectations))
    return float(expectations[index]), index


def max_expectation(reg: Regularity, f: StateFunction = identity) -> tuple[float, int]:
    expectations = reg.member_expectations(reg.grid.values_of(f))
    index = int(np.argmax(expectations))
    return float(expectations[index]), index


def dirac_family(grid: ThetaGrid) -> Regularity:
    """Every point mass on the grid: complete uncertainty about the state."""
    return Regularity(grid,
                      tuple(Distribution.dirac(grid, index) for index in range(len(grid))),
                      label="dirac")


def empirical_regularity(samples: Sequence[float], window: int, stride: int = 1, label: str = "") -> Regularity:
    """
    Build a regularity from the relative frequencies of sliding windows.

    Args:
        samples: ordered ROI observations, decimal rates
        window: number of observations per window
        stride: distance between consecutive window starts
        label: free text stored on the regularity
    """
    if len(samples) == 0:
        raise EmptySamples("Cannot build a regularity from an empty sample")
    if window < 1 or stride < 1:
        raise InvalidWindow(f"Window ({window}) and stride ({stride}) must be positive")
    if window > len(samples):
        raise WindowTooLarge(f"Window {window} is larger than the number of samples {len(samples)}")

    values = np.asarray(samples, dtype=float)
    if not np.all(np.isfinite(values)):
        raise EmptySamples("Samples contain non-finite values")

    states, codes = np.unique(values, return_inverse=True)
    grid = ThetaGrid(tuple(states.tolist()))

    frequencies = []
    for start in range(0, len(values) - window + 1, stride):
        counts = np.bincount(codes[start:start + window], minlength=len(grid))
        frequencies.append(Distribution(grid, tuple((counts / window).tolist())))

    members = unique_members(frequencies)
    if len(members) < len(frequencies):
        logging.debug(f"Collapsed {len(frequencies) - len(members)} duplicate windows out of {len(frequencies)}")

    return Regularity(grid, members, label=label)


def convex_samples(reg: Regularity,
                   count: int,
                   seed: int,
                   mixing_sampler: Callable[[int], np.ndarray] | None = None) -> list[Distribution]:
    """
    Draw random convex combinations of the members of a regularity.

    By default mixing weights come from a flat Dirichlet distribution of a
    generator seeded with `seed`; `mixing_sampler` replaces it and must
    return one simplex vector for the given number of members.
    """
    if mixing_sampler is None:
        generator = np.random.default_rng(seed)
        mixing_sampler = lambda size: generator.dirichlet(np.ones(size))

    members = reg.weights_matrix()
    samples = []
    for _ in range(count):
        mixture = np.clip(np.asarray(mixing_sampler(len(reg)), dtype=float) @ members, 0.0, None)
        samples.append(Distribution(reg.grid, tuple((mixture / mixture.sum()).tolist())))

    return samples


def regularity_to_payload(reg: Regularity) -> dict:
    payload = {
        "states": list(reg.grid.states),
        "members": [list(member.weights) for member in reg.members],
    }
    if reg.label:
        payload["label"] = reg.label
    return payload


def regularity_from_payload(payload) -> Regularity:
    if not isinstance(payload, dict):
        raise InvalidRegularity("Regularity must be a JSON object")
    if "states" not in payload or "members" not in payload:
        raise InvalidRegularity("Regularity requires 'states' and 'members'")

    states, members, label = payload["states"], payload["members"], payload.get("label", "")
    if not isinstance(states, list) or not all(_is_number(state) for state in states):
        raise InvalidRegularity("'states' must be an array of numbers")
    if not isinstance(members, list) or not all(
            isinstance(row, list) and all(_is_number(weight) for weight in row) for row in members):
        raise InvalidRegularity("'members' must be an array of arrays of numbers")
    if not isinstance(label, str):
        raise InvalidRegularity("'label' must be a string")

    grid = ThetaGrid(tuple(states))
    return Regularity(grid, tuple(Distribution(grid, tuple(row)) for row in members), label=label)


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)
