import logging

from .criteria import Utility, attitudes_diverge, build_criterion, evaluate
from .optimizer import LeverageWindow, grid_optimize, optimize
from .regularity import Regularity
from .scheme import Decision


class DecisionDesk:
    """Evaluates and optimizes leverage decisions against one statistical regularity."""

    def __init__(self, regularity: Regularity):
        self.regularity = regularity

    def evaluate(self, criterion, u, price, utility: Utility | None = None, dist_index=None):
        decision = Decision(u, price)
        kind = build_criterion(criterion, self.regularity, utility=utility, dist_index=dist_index)

        return {
            "criterion": criterion,
            "u": decision.u,
            "p": decision.p,
            "value": evaluate(kind, decision),
        }

    def optimize(self,
                 criterion,
                 u_min,
                 u_max,
                 price,
                 grid_steps=None,
                 utility: Utility | None = None,
                 dist_index=None,
                 show_progress=False):
        window = LeverageWindow(u_min, u_max, price)
        kind = build_criterion(criterion, self.regularity, utility=utility, dist_index=dist_index)

        if attitudes_diverge(self.regularity, price):
            logging.info(f"Price {price!r} lies strictly inside the expectation band of '{self.regularity.label or 'regularity'}': "
                         f"averse and prone decision makers choose opposite leverage bounds")

        if grid_steps is not None:
            outcome = grid_optimize(kind, window, grid_steps, show_progress=show_progress)
        else:
            outcome = optimize(kind, window)

        return outcome.to_payload()

    def get_details(self):
        lowest, highest = self.regularity.expectation_band()
        return {
            "label": self.regularity.label,
            "numberOfStates": len(self.regularity.grid),
            "numberOfMembers": len(self.regularity),
            "minExpectation": lowest,
            "maxExpectation": highest,
        }
