import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import InvalidWindow
from ..utils.progress_bar import wrap_iterator_with_progress_bar
from .criteria import CriterionKind, effective_expectation, evaluate
from .scheme import Decision

FLAT_TOLERANCE = 1e-12
DEFAULT_GRID_STEPS = 101


class EdgeCase(Enum):
    INTERIOR_TIE = "interior_tie"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"
    FLAT = "flat"


@dataclass(frozen=True)
class LeverageWindow:
    """Admissible leverage interval [u_min, u_max] at a fixed price."""

    u_min: float
    u_max: float
    price: float

    def __post_init__(self):
        if not all(math.isfinite(value) for value in (self.u_min, self.u_max, self.price)):
            raise InvalidWindow(f"Window bounds and price must be finite: {self}")
        if not 0 <= self.u_min <= self.u_max:
            raise InvalidWindow(f"Window must satisfy 0 <= u_min <= u_max, got [{self.u_min}, {self.u_max}]")
        if self.price < 0:
            raise InvalidWindow(f"Price must be non-negative, got {self.price}")


@dataclass(frozen=True)
class OptimizationOutcome:
    best: Decision
    value: float
    edge_case: EdgeCase

    def to_payload(self) -> dict:
        return {
            "best_u": self.best.u,
            "best_value": self.value,
            "edge_case": self.edge_case.value,
        }


def optimize(kind: CriterionKind, window: LeverageWindow) -> OptimizationOutcome:
    """
    Maximize a criterion that is linear in leverage, L*(u) = u·(m − p).

    The maximizer sits on the boundary of the window: u_max when m > p,
    u_min when m < p; a flat criterion resolves to u_min.
    """
    m = effective_expectation(kind)
    spread = m - window.price

    if abs(spread) <= FLAT_TOLERANCE:
        u, edge_case = window.u_min, EdgeCase.FLAT
    elif spread > 0:
        u, edge_case = window.u_max, EdgeCase.UPPER_BOUND
    else:
        u, edge_case = window.u_min, EdgeCase.LOWER_BOUND

    logging.debug(f"Criterion '{kind.name}' has effective expectation {m!r} against price {window.price!r}: {edge_case.value}")

    best = Decision(u, window.price)
    return OptimizationOutcome(best, evaluate(kind, best), edge_case)


def grid_optimize(kind: CriterionKind,
                  window: LeverageWindow,
                  steps: int = DEFAULT_GRID_STEPS,
                  show_progress: bool = False) -> OptimizationOutcome:
    """Brute-force search over `steps` equispaced leverages, both endpoints included."""
    if steps < 2:
        raise InvalidWindow(f"Grid search needs at least 2 steps, got {steps}")

    leverages = np.linspace(window.u_min, window.u_max, steps)
    iterator = wrap_iterator_with_progress_bar(leverages, progress_bar_name="Evaluating leverages") \
        if show_progress else leverages

    values = np.asarray([evaluate(kind, Decision(float(u), window.price)) for u in iterator])

    # argmax keeps the first maximum, i.e. the smallest leverage on ties
    index = int(np.argmax(values))
    # a linear criterion spans |m - p|·(u_max - u_min), flat there iff |m - p| <= FLAT_TOLERANCE
    if values.max() - values.min() <= FLAT_TOLERANCE * max(1.0, window.u_max - window.u_min):
        index, edge_case = 0, EdgeCase.FLAT
    elif index == 0:
        edge_case = EdgeCase.LOWER_BOUND
    elif index == steps - 1:
        edge_case = EdgeCase.UPPER_BOUND
    else:
        edge_case = EdgeCase.INTERIOR_TIE

    return OptimizationOutcome(Decision(float(leverages[index]), window.price), float(values[index]), edge_case)
