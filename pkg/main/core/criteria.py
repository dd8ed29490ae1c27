"""
Criterion functionals over decisions.

Four decision-maker classes are covered: expected utility under a single
distribution, uncertainty averse (minimum expected consequence over a
regularity), uncertainty prone (maximum) and complete uncertainty, the
worst state of the grid. Averse and prone criteria work on profits and
losses directly, a utility function is only available for `expected`.
"""
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import InvalidDistribution, NegativeLeverage, NonFiniteValue, UnsupportedCriterion
from .regularity import Distribution, Regularity, ThetaGrid, dirac_family, max_expectation, min_expectation
from .scheme import Decision, consequence


class Attitude(Enum):
    AVERSE = "averse"
    PRONE = "prone"


class UtilityType(Enum):
    IDENTITY = "identity"
    EXPONENTIAL = "exp"
    POWER = "pow"


@dataclass(frozen=True)
class Utility:
    type: UtilityType = UtilityType.IDENTITY
    parameter: float | None = None

    def __post_init__(self):
        if self.type == UtilityType.IDENTITY:
            if self.parameter is not None:
                raise UnsupportedCriterion("Identity utility takes no parameter")
            return

        if self.parameter is None or not math.isfinite(self.parameter):
            raise UnsupportedCriterion(f"Utility '{self.type.value}' needs a finite parameter")
        if self.type == UtilityType.EXPONENTIAL and self.parameter == 0:
            raise UnsupportedCriterion("Exponential utility needs alpha != 0")
        if self.type == UtilityType.POWER and self.parameter <= 0:
            raise UnsupportedCriterion("Power utility needs gamma > 0")

    @property
    def is_identity(self) -> bool:
        return self.type == UtilityType.IDENTITY

    def __call__(self, x):
        x = np.asarray(x, dtype=float)

        if self.type == UtilityType.EXPONENTIAL:
            # alpha > 0 is concave (risk averse), alpha < 0 convex
            return -np.expm1(-self.parameter * x) / self.parameter
        if self.type == UtilityType.POWER:
            return np.sign(x) * np.abs(x) ** self.parameter

        return x

    def __str__(self):
        return self.type.value if self.is_identity else f"{self.type.value}:{self.parameter!r}"


def parse_utility(text: str) -> Utility:
    """Parse 'identity', 'exp:ALPHA' or 'pow:GAMMA'."""
    name, _, parameter = text.strip().partition(":")

    try:
        utility_type = UtilityType(name)
    except ValueError:
        raise UnsupportedCriterion(f"Unknown utility '{text}', expected identity, exp:ALPHA or pow:GAMMA") from None

    if utility_type == UtilityType.IDENTITY:
        if parameter:
            raise UnsupportedCriterion(f"Identity utility takes no parameter, got '{text}'")
        return Utility()

    try:
        value = float(parameter)
    except ValueError:
        raise UnsupportedCriterion(f"Utility parameter must be a number, got '{text}'") from None

    return Utility(utility_type, value)


@dataclass(frozen=True)
class ExpectedCriterion:
    distribution: Distribution
    utility: Utility = field(default_factory=Utility)
    name = "expected"


@dataclass(frozen=True)
class AverseCriterion:
    regularity: Regularity
    name = "averse"


@dataclass(frozen=True)
class ProneCriterion:
    regularity: Regularity
    name = "prone"


@dataclass(frozen=True)
class WaldCriterion:
    grid: ThetaGrid
    name = "wald"


CriterionKind = ExpectedCriterion | AverseCriterion | ProneCriterion | WaldCriterion


def consequence_vector(grid: ThetaGrid, d: Decision) -> np.ndarray:
    return np.asarray([consequence(theta, d) for theta in grid.states], dtype=float)


def evaluate(kind: CriterionKind, d: Decision) -> float:
    if isinstance(kind, ExpectedCriterion):
        q = kind.distribution
        value = q.expect(kind.utility(consequence_vector(q.grid, d)))
    elif isinstance(kind, AverseCriterion):
        value = float(kind.regularity.member_expectations(consequence_vector(kind.regularity.grid, d)).min())
    elif isinstance(kind, ProneCriterion):
        value = float(kind.regularity.member_expectations(consequence_vector(kind.regularity.grid, d)).max())
    elif isinstance(kind, WaldCriterion):
        value = consequence(kind.grid.states[0], d)
    else:
        raise UnsupportedCriterion(f"Unknown criterion: {kind!r}")

    if not math.isfinite(value):
        raise NonFiniteValue(f"Criterion '{kind.name}' is not finite at u={d.u!r}, p={d.p!r}")
    return value


def evaluate_factored(Q: Regularity, d: Decision, attitude: Attitude = Attitude.AVERSE) -> float:
    """u·(min E_q θ − p), or with max for the prone attitude; needs u >= 0."""
    if d.u < 0:
        raise NegativeLeverage(f"Factored criterion needs u >= 0, got {d.u}")

    extreme, _ = min_expectation(Q) if attitude == Attitude.AVERSE else max_expectation(Q)
    return d.u * (extreme - d.p)


def wald_is_dirac_limit(grid: ThetaGrid, d: Decision) -> tuple[float, float]:
    return evaluate(AverseCriterion(dirac_family(grid)), d), evaluate(WaldCriterion(grid), d)


def effective_expectation(kind: CriterionKind) -> float:
    """The m for which the criterion reads u·(m − p); only linear criteria have one."""
    if isinstance(kind, AverseCriterion):
        return min_expectation(kind.regularity)[0]

    if isinstance(kind, ProneCriterion):
        return max_expectation(kind.regularity)[0]

    if isinstance(kind, WaldCriterion):
        return kind.grid.states[0]

    if isinstance(kind, ExpectedCriterion):
        if kind.utility.is_identity:
            return kind.distribution.mean()
        raise UnsupportedCriterion(f"Expected criterion with utility '{kind.utility}' is not linear in leverage")

    raise UnsupportedCriterion(f"Unknown criterion: {kind!r}")


def attitudes_diverge(Q: Regularity, p: float) -> bool:
    """True when averse and prone decision makers pick opposite leverage extremes at price p."""
    lowest, highest = Q.expectation_band()
    return lowest < p < highest


def build_criterion(name: str,
                    regularity: Regularity,
                    utility: Utility | None = None,
                    dist_index: int | None = None) -> CriterionKind:
    if name == AverseCriterion.name:
        return AverseCriterion(regularity)

    if name == ProneCriterion.name:
        return ProneCriterion(regularity)

    if name == WaldCriterion.name:
        return WaldCriterion(regularity.grid)

    if name == ExpectedCriterion.name:
        index = 0 if dist_index is None else dist_index
        if not 0 <= index < len(regularity):
            raise InvalidDistribution(f"Distribution index {index} is outside of regularity with {len(regularity)} members")
        return ExpectedCriterion(regularity.members[index], utility or Utility())

    raise UnsupportedCriterion(f"Unknown criterion: {name}")
