"""
Return on Capital algebra and the matrix decision scheme.

All rates are decimals (0.05 means 5%). Currency amounts carry no currency
code, only their ratios matter.
"""
import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import EmptyDecisionSet, InvalidCapitalStructure, InvalidDecision
from .regularity import ThetaGrid


@dataclass(frozen=True)
class CapitalStructure:
    capital: float
    borrowed: float
    roi: float
    cof: float
    coc: float

    def __post_init__(self):
        for name in ("capital", "borrowed", "roi", "cof", "coc"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidCapitalStructure(f"'{name}' must be finite, got {getattr(self, name)}")
        if self.capital <= 0:
            raise InvalidCapitalStructure(f"Capital must be positive, got {self.capital}")
        if self.borrowed < 0:
            raise InvalidCapitalStructure(f"Borrowed funds must be non-negative, got {self.borrowed}")

    @property
    def assets(self) -> float:
        return self.capital + self.borrowed


@dataclass(frozen=True)
class Decision:
    """Leverage `u` applied to the spread over the price `p`."""

    u: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.u) and math.isfinite(self.p)):
            raise InvalidDecision(f"Decision must be finite, got u={self.u}, p={self.p}")
        if self.u < 0 or self.p < 0:
            raise InvalidDecision(f"Decision must satisfy u >= 0 and p >= 0, got u={self.u}, p={self.p}")
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "p", float(self.p))


@dataclass(frozen=True)
class DecisionScheme:
    decisions: tuple[Decision, ...]
    grid: ThetaGrid
    consequences: tuple[tuple[float, ...], ...]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["decision", *[repr(state) for state in self.grid.states]])
        for decision, row in zip(self.decisions, self.consequences):
            writer.writerow([f"{decision.u!r},{decision.p!r}", *[repr(value) for value in row]])
        return buffer.getvalue()


def roc_general(cs: CapitalStructure) -> float:
    return (cs.assets * (1 + cs.roi) - cs.borrowed * (1 + cs.cof) - cs.capital * (1 + cs.coc)) / cs.capital


def roc_leverage_form(lev: float, roi: float, cost: float) -> float:
    if lev < 0:
        raise InvalidDecision(f"Leverage must be non-negative, got {lev}")
    return lev * (roi - cost)


def roc_decomposed(cs: CapitalStructure) -> float:
    """General return on capital split into leverage, funding and capital cost terms."""
    lev = leverage_from_structure(cs)
    return lev * cs.roi - (lev - 1) * cs.cof - cs.coc


def leverage_from_structure(cs: CapitalStructure) -> float:
    return cs.assets / cs.capital


def consequence(theta: float, d: Decision) -> float:
    return d.u * (theta - d.p)


def build_scheme(decisions: Sequence[Decision], grid: ThetaGrid) -> DecisionScheme:
    if not decisions:
        raise EmptyDecisionSet("Decision scheme needs at least one decision")

    consequences = tuple(
        tuple(consequence(theta, decision) for theta in grid.states)
        for decision in decisions
    )
    return DecisionScheme(tuple(decisions), grid, consequences)


def decision_from_payload(payload) -> Decision:
    if not isinstance(payload, dict) or "u" not in payload or "p" not in payload:
        raise InvalidDecision(f"Decision must be an object with 'u' and 'p', got {payload!r}")
    u, p = payload["u"], payload["p"]
    if not all(isinstance(value, (int, float)) and not isinstance(value, bool) for value in (u, p)):
        raise InvalidDecision(f"Decision 'u' and 'p' must be numbers, got {payload!r}")
    return Decision(u, p)


def decision_to_payload(d: Decision) -> dict:
    return {"u": d.u, "p": d.p}


def scheme_from_payload(payload) -> DecisionScheme:
    if not isinstance(payload, dict) or "decisions" not in payload or "states" not in payload:
        raise InvalidDecision("Scheme requires 'decisions' and 'states'")
    if not isinstance(payload["decisions"], list):
        raise InvalidDecision("'decisions' must be an array")
    states = payload["states"]
    if not isinstance(states, list) or not all(
            isinstance(state, (int, float)) and not isinstance(state, bool) for state in states):
        raise InvalidDecision("'states' must be an array of numbers")

    return build_scheme([decision_from_payload(item) for item in payload["decisions"]],
                        ThetaGrid(tuple(states)))
