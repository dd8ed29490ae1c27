#!/usr/bin/env python3
import json
import argparse

from mcp.server.fastmcp import FastMCP

from main.factories.decision_desk_factory import create_decision_desk
from main.mcp import decision_tools
from main.utils.logger import setup_root_logger

setup_root_logger()

mcp = FastMCP("leverage-decisions")

ap = argparse.ArgumentParser()
ap.add_argument("-regularity", "--regularity", required=True, help="Regularity JSON file the tools evaluate against")
ap.add_argument("-name", "--name", required=False, default=None, help="Suffix for tool names. Defaults to the regularity label")
args = vars(ap.parse_args())

desk = create_decision_desk(args['regularity'])
tool_suffix = args['name'] or desk.regularity.label or "regularity"

regularity_description = json.dumps(desk.get_details(), ensure_ascii=False)

evaluate_description = f"""Evaluates a leverage decision (leverage u, price in percent) against the statistical regularity {regularity_description}.
criterion is one of 'averse' (worst expected return on capital), 'prone' (best), 'wald' (worst state) or 'expected' (one member, see dist and utility).
The returned value is a decimal return on capital (0.1 means 10%)."""

optimize_description = f"""Chooses the optimal leverage in [u_min, u_max] at a fixed price in percent against the statistical regularity {regularity_description}.
Uncertainty averse decision makers end at the lowest leverage when the worst expectation is below the price, prone ones at the highest when the best expectation is above it."""


@mcp.tool(name=f"evaluate_decision_{tool_suffix}", description=evaluate_description)
def evaluate_decision(u: float, price_percent: float, criterion: str = "averse", utility: str = "identity", dist: int = 0) -> str:
    return decision_tools.evaluate_decision(desk, u, price_percent, criterion=criterion, utility=utility, dist=dist)


@mcp.tool(name=f"optimize_leverage_{tool_suffix}", description=optimize_description)
def optimize_leverage(u_min: float, u_max: float, price_percent: float, criterion: str = "averse") -> str:
    return decision_tools.optimize_leverage(desk, u_min, u_max, price_percent, criterion=criterion)


if __name__ == "__main__":
    mcp.run(transport='stdio')
