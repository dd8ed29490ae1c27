import json

from main.cli.commands import percent_to_decimal
from main.core.criteria import ExpectedCriterion, parse_utility
from main.core.decision_desk import DecisionDesk
from main.errors import NonFiniteValue


def evaluate_decision(desk: DecisionDesk, u, price_percent, criterion="averse", utility="identity", dist=0):
    # utility and dist only mean something for the expected criterion, other criteria ignore them
    is_expected = criterion == ExpectedCriterion.name
    result = desk.evaluate(criterion,
                           u=u,
                           price=percent_to_decimal(price_percent),
                           utility=parse_utility(utility) if is_expected else None,
                           dist_index=dist if is_expected else None)

    return __to_json(result)


def optimize_leverage(desk: DecisionDesk, u_min, u_max, price_percent, criterion="averse"):
    result = desk.optimize(criterion, u_min=u_min, u_max=u_max, price=percent_to_decimal(price_percent))

    return __to_json(result)


def __to_json(result):
    try:
        return json.dumps(result, indent=2, ensure_ascii=False, allow_nan=False)
    except ValueError:
        raise NonFiniteValue("Result holds an infinite or undefined number") from None
