"""
Consecutive leverage.

A chain stacks N leveraged vehicles: the ROI of each level is the ROC of
the next one inwards, and the innermost level is driven by the primitive
random variable. Level 0 is the outermost, investor-facing vehicle.
"""
import math
from dataclasses import dataclass

from ..errors import InvalidDecision, NonFiniteValue
from .criteria import Attitude
from .regularity import Regularity, max_expectation, min_expectation, regularity_from_payload, regularity_to_payload
from .scheme import Decision, decision_from_payload, decision_to_payload


@dataclass(frozen=True)
class LeverageChain:
    levels: tuple[Decision, ...]
    primitive: Regularity

    def __post_init__(self):
        levels = tuple(self.levels)
        if not levels:
            raise InvalidDecision("Leverage chain needs at least one level")
        object.__setattr__(self, "levels", levels)

    def __len__(self):
        return len(self.levels)

    @property
    def has_zero_spreads(self) -> bool:
        return all(level.p == 0 for level in self.levels)


def see_through(chain: LeverageChain) -> float:
    return math.prod(level.u for level in chain.levels)


def chain_consequence(theta_N: float, chain: LeverageChain) -> float:
    x = theta_N
    for level in reversed(chain.levels):
        x = level.u * (x - level.p)
    return x


def chain_criterion(chain: LeverageChain, attitude: Attitude) -> float:
    # affine and non-decreasing in theta_N since every u_i >= 0, so the extreme member expectation passes through
    extreme, _ = min_expectation(chain.primitive) if attitude == Attitude.AVERSE else max_expectation(chain.primitive)
    value = chain_consequence(extreme, chain)

    if not math.isfinite(value):
        raise NonFiniteValue(f"Chain criterion overflows: see-through leverage {see_through(chain)!r}")
    return value


def chain_criterion_factored(chain: LeverageChain, attitude: Attitude) -> float:
    """(Π u_i)·(min or max E θ_N); equals chain_criterion only when every p_i is zero."""
    extreme, _ = min_expectation(chain.primitive) if attitude == Attitude.AVERSE else max_expectation(chain.primitive)
    return see_through(chain) * extreme


def chain_from_payload(payload) -> LeverageChain:
    if not isinstance(payload, dict) or "levels" not in payload or "primitive" not in payload:
        raise InvalidDecision("Chain requires 'levels' and 'primitive'")
    if not isinstance(payload["levels"], list):
        raise InvalidDecision("'levels' must be an array")

    return LeverageChain(tuple(decision_from_payload(level) for level in payload["levels"]),
                         regularity_from_payload(payload["primitive"]))


def chain_to_payload(chain: LeverageChain) -> dict:
    return {
        "levels": [decision_to_payload(level) for level in chain.levels],
        "primitive": regularity_to_payload(chain.primitive),
    }
