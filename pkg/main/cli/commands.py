"""
Command line front end.

Rates are typed in percent (`--roi 6` means 6%) and converted to decimals
at the boundary; every JSON payload carries decimals. Exit codes: 0 on
success, 2 on input errors, 3 on semantic misuse of criterion flags.
"""
import argparse
import json
import logging
import math
import sys

from main import __version__
from main.core.chain import chain_criterion, see_through
from main.core.criteria import Attitude, ExpectedCriterion, parse_utility
from main.core.optimizer import DEFAULT_GRID_STEPS
from main.core.regularity import empirical_regularity, regularity_to_payload
from main.core.scheme import (
    CapitalStructure,
    leverage_from_structure,
    roc_decomposed,
    roc_general,
    roc_leverage_form,
)
from main.errors import CriterionFlagMisuse, LeverageError, NonFiniteValue, UnsupportedCriterion
from main.factories.decision_desk_factory import create_decision_desk
from main.factories.scenario_factory import load_chain, load_samples, load_scheme
from main.persisters.disk_persister import DiskPersister
from main.utils.logger import setup_root_logger
from main.utils.performance import log_execution_duration

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_MISUSE = 3

CRITERIA = ["averse", "prone", "wald", "expected"]


def percent_to_decimal(percent):
    return percent / 100


def decimal_to_percent(decimal):
    return decimal * 100


def format_percent(decimal):
    return f"{decimal_to_percent(decimal):.4f}%"


def __finite(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def positive_amount(text):
    value = __finite(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def non_negative_amount(text):
    value = __finite(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def percent_rate(text):
    return percent_to_decimal(__finite(text))


def non_negative_percent_rate(text):
    return percent_to_decimal(non_negative_amount(text))


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def utility_flag(text):
    try:
        return parse_utility(text)
    except UnsupportedCriterion as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def cmd_roc(args):
    cs = CapitalStructure(capital=args['capital'],
                          borrowed=args['borrowed'],
                          roi=args['roi'],
                          cof=args['coc'] if args['cof'] is None else args['cof'],
                          coc=args['coc'])
    lev = leverage_from_structure(cs)

    result = {
        "leverage": lev,
        "roc_general": roc_general(cs),
        "roc_decomposed": roc_decomposed(cs),
    }
    # The leverage form only holds when funding and capital cost coincide
    if cs.cof == cs.coc:
        result["roc_leverage_form"] = roc_leverage_form(lev, cs.roi, cs.coc)

    if args['json']:
        return __print_json(result)

    rows = [("LEV", f"{lev:.4f}"),
            ("ROC (general)", format_percent(result["roc_general"])),
            ("ROC (decomposed)", format_percent(result["roc_decomposed"]))]
    if "roc_leverage_form" in result:
        rows.append(("ROC (leverage form)", format_percent(result["roc_leverage_form"])))
    return __print_table(rows)


def cmd_eval(args):
    __check_criterion_flags(args)

    desk = create_decision_desk(args['regularity'])
    result = log_execution_duration(lambda: desk.evaluate(args['criterion'],
                                                          u=args['u'],
                                                          price=args['price'],
                                                          utility=args['utility'],
                                                          dist_index=args['dist']),
                                    identifier=f"Evaluating '{args['criterion']}' criterion")

    if args['json']:
        return __print_json(result)

    return __print_table([("criterion", result["criterion"]),
                          ("u", repr(result["u"])),
                          ("p", format_percent(result["p"])),
                          ("value", repr(result["value"]))])


def cmd_optimize(args):
    __check_criterion_flags(args)

    desk = create_decision_desk(args['regularity'])
    result = log_execution_duration(lambda: desk.optimize(args['criterion'],
                                                          u_min=args['u_min'],
                                                          u_max=args['u_max'],
                                                          price=args['price'],
                                                          grid_steps=args['grid_steps'],
                                                          utility=args['utility'],
                                                          dist_index=args['dist'],
                                                          show_progress=not args['quiet'] and not args['json']),
                                    identifier=f"Optimizing leverage for '{args['criterion']}' criterion")

    if args['json']:
        return __print_json(result)

    return __print_table([("best u", repr(result["best_u"])),
                          ("best value", repr(result["best_value"])),
                          ("edge case", result["edge_case"])])


def cmd_chain(args):
    chain = load_chain(args['chain'])

    result = {
        "see_through": see_through(chain),
        "averse_value": chain_criterion(chain, Attitude.AVERSE),
        "prone_value": chain_criterion(chain, Attitude.PRONE),
    }

    if args['json']:
        return __print_json(result)

    return __print_table([("levels", str(len(chain))),
                          ("see-through leverage", repr(result["see_through"])),
                          ("averse value", repr(result["averse_value"])),
                          ("prone value", repr(result["prone_value"]))])


def cmd_scheme(args):
    scheme = load_scheme(args['scheme'])

    if args['json']:
        return __print_json({
            "decisions": [{"u": d.u, "p": d.p} for d in scheme.decisions],
            "states": list(scheme.grid.states),
            "consequences": [list(row) for row in scheme.consequences],
        })

    sys.stdout.write(scheme.to_csv())
    return EXIT_OK


def cmd_regularity_build(args):
    samples = load_samples(args['samples'])
    regularity = log_execution_duration(lambda: empirical_regularity(samples,
                                                                     window=args['window'],
                                                                     stride=args['stride'],
                                                                     label=args['label'] or ""),
                                        identifier=f"Building regularity from {len(samples)} samples")

    DiskPersister().save_json_file(regularity_to_payload(regularity), args['out'])
    logging.info(f"Regularity saved to {args['out']}")

    result = {
        "members": len(regularity),
        "states": len(regularity.grid),
        "out": args['out'],
    }

    if args['json']:
        return __print_json(result)

    return __print_table([("members", str(result["members"])),
                          ("states", str(result["states"])),
                          ("out", result["out"])])


def __check_criterion_flags(args):
    if args['criterion'] == ExpectedCriterion.name:
        return
    if args['utility'] is not None:
        raise CriterionFlagMisuse(f"--utility applies only to the 'expected' criterion, not '{args['criterion']}'")
    if args['dist'] is not None:
        raise CriterionFlagMisuse(f"--dist applies only to the 'expected' criterion, not '{args['criterion']}'")


def __print_json(payload):
    try:
        text = json.dumps(payload, indent=2, ensure_ascii=False, allow_nan=False)
    except ValueError:
        raise NonFiniteValue("Result holds an infinite or undefined number and cannot be written as JSON") from None
    sys.stdout.write(text + "\n")
    return EXIT_OK


def __print_table(rows):
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        sys.stdout.write(f"{name.ljust(width)}  {value}\n")
    return EXIT_OK


def build_parser():
    output_flags = argparse.ArgumentParser(add_help=False)
    output_flags.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="Print machine-readable JSON instead of a table")
    output_flags.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="Only log warnings and errors")
    output_flags.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="Log debug details and timings")

    ap = argparse.ArgumentParser(prog="leverage", description="Return on capital, criteria under statistical regularities and optimal leverage")
    ap.add_argument("--json", action="store_true", default=False, help="Print machine-readable JSON instead of a table")
    ap.add_argument("--quiet", action="store_true", default=False, help="Only log warnings and errors")
    ap.add_argument("--verbose", action="store_true", default=False, help="Log debug details and timings")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    commands = ap.add_subparsers(dest="command", required=True)

    roc = commands.add_parser("roc", parents=[output_flags], help="Return on capital of a capital structure")
    roc.add_argument("--capital", required=True, type=positive_amount, help="Own capital C, currency amount > 0")
    roc.add_argument("--borrowed", required=True, type=non_negative_amount, help="Borrowed funds B, currency amount >= 0")
    roc.add_argument("--roi", required=True, type=percent_rate, help="Return on investment, percent")
    roc.add_argument("--cof", required=False, type=percent_rate, default=None, help="Cost of funding, percent. Defaults to --coc")
    roc.add_argument("--coc", required=True, type=percent_rate, help="Cost of capital, percent")
    roc.set_defaults(handler=cmd_roc)

    criterion_flags = argparse.ArgumentParser(add_help=False)
    criterion_flags.add_argument("--regularity", required=True, help="Regularity JSON file")
    criterion_flags.add_argument("--criterion", required=True, choices=CRITERIA, help="Decision maker class")
    criterion_flags.add_argument("--utility", required=False, type=utility_flag, default=None, help="identity, exp:ALPHA or pow:GAMMA; only for the 'expected' criterion")
    criterion_flags.add_argument("--dist", required=False, type=int, default=None, help="Index of the regularity member used by the 'expected' criterion")

    evaluate = commands.add_parser("eval", parents=[output_flags, criterion_flags], help="Evaluate one decision")
    evaluate.add_argument("--u", required=True, type=non_negative_amount, help="Leverage u >= 0")
    evaluate.add_argument("--price", required=True, type=non_negative_percent_rate, help="Price p, percent")
    evaluate.set_defaults(handler=cmd_eval)

    optimize = commands.add_parser("optimize", parents=[output_flags, criterion_flags], help="Choose the optimal leverage in a window")
    optimize.add_argument("--u-min", required=True, type=non_negative_amount, help="Lower leverage bound")
    optimize.add_argument("--u-max", required=True, type=non_negative_amount, help="Upper leverage bound")
    optimize.add_argument("--price", required=True, type=non_negative_percent_rate, help="Price p, percent")
    optimize.add_argument("--grid-steps", required=False, type=positive_int, default=None, help=f"Force the brute-force search with this many leverages (e.g. {DEFAULT_GRID_STEPS})")
    optimize.set_defaults(handler=cmd_optimize)

    chain = commands.add_parser("chain", parents=[output_flags], help="See-through leverage of a leverage chain")
    chain.add_argument("--chain", required=True, help="Chain JSON file")
    chain.set_defaults(handler=cmd_chain)

    scheme = commands.add_parser("scheme", parents=[output_flags], help="Consequence matrix of a decision scheme as CSV")
    scheme.add_argument("--scheme", required=True, help="Scheme JSON file")
    scheme.set_defaults(handler=cmd_scheme)

    regularity = commands.add_parser("regularity", help="Regularity file tools")
    regularity_commands = regularity.add_subparsers(dest="regularity_command", required=True)

    build = regularity_commands.add_parser("build", parents=[output_flags], help="Build a regularity from sliding windows over samples")
    build.add_argument("--samples", required=True, help="CSV file with one decimal ROI per line, '#' starts a comment")
    build.add_argument("--window", required=True, type=positive_int, help="Observations per window")
    build.add_argument("--stride", required=False, type=positive_int, default=1, help="Distance between window starts")
    build.add_argument("--out", required=True, help="Output regularity JSON file")
    build.add_argument("--label", required=False, default=None, help="Label stored in the regularity file")
    build.set_defaults(handler=cmd_regularity_build)

    return ap


def run(argv=None):
    try:
        args = vars(build_parser().parse_args(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    if args['quiet']:
        level = logging.WARNING
    elif args['verbose']:
        level = logging.DEBUG
    else:
        level = logging.INFO
    setup_root_logger(level)

    try:
        return args['handler'](args)
    except (CriterionFlagMisuse, UnsupportedCriterion) as e:
        logging.error(f"Error: {e}")
        return EXIT_MISUSE
    except (LeverageError, OSError) as e:
        logging.error(f"Error: {e}")
        return EXIT_INPUT_ERROR
