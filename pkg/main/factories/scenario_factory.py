import json
import math
from dataclasses import dataclass
from enum import Enum

from main.core.chain import chain_from_payload
from main.core.regularity import regularity_from_payload
from main.core.scheme import scheme_from_payload
from main.errors import EmptySamples, LeverageError, ScenarioFileError
from main.persisters.disk_persister import DiskPersister
from main.utils.performance import log_execution_duration


class SCENARIO_TYPE(Enum):
    REGULARITY = "regularity"
    SCHEME = "scheme"
    CHAIN = "chain"
    SAMPLES = "samples"


@dataclass(frozen=True)
class ScenarioFile:
    path: str
    type: SCENARIO_TYPE
    payload: object


def read_scenario_file(path, scenario_type: SCENARIO_TYPE, persister=None):
    persister = persister or DiskPersister()

    return log_execution_duration(
        lambda: ScenarioFile(path, scenario_type, __parse(path, scenario_type, persister)),
        identifier=f"Reading {scenario_type.value} file: {path}"
    )


def load_regularity(path, persister=None):
    return read_scenario_file(path, SCENARIO_TYPE.REGULARITY, persister).payload


def load_scheme(path, persister=None):
    return read_scenario_file(path, SCENARIO_TYPE.SCHEME, persister).payload


def load_chain(path, persister=None):
    return read_scenario_file(path, SCENARIO_TYPE.CHAIN, persister).payload


def load_samples(path, persister=None):
    return read_scenario_file(path, SCENARIO_TYPE.SAMPLES, persister).payload


def __parse(path, scenario_type, persister):
    if not persister.is_path_exists(path):
        raise ScenarioFileError(path, "file does not exist")

    try:
        if scenario_type == SCENARIO_TYPE.SAMPLES:
            return __parse_samples(path, persister)

        payload = persister.read_json_file(path)

        if scenario_type == SCENARIO_TYPE.REGULARITY:
            return regularity_from_payload(payload)
        if scenario_type == SCENARIO_TYPE.SCHEME:
            return scheme_from_payload(payload)
        if scenario_type == SCENARIO_TYPE.CHAIN:
            return chain_from_payload(payload)
    except ScenarioFileError:
        raise
    except (OSError, UnicodeDecodeError) as e:
        raise ScenarioFileError(path, f"cannot be read: {e}") from e
    except json.JSONDecodeError as e:
        raise ScenarioFileError(path, f"is not valid JSON: {e}") from e
    except LeverageError as e:
        raise ScenarioFileError(path, str(e)) from e
    except (OverflowError, ValueError) as e:
        raise ScenarioFileError(path, f"holds a number that cannot be represented as a float: {e}") from e

    raise ValueError(f"Unknown scenario type: {scenario_type}")


def __parse_samples(path, persister):
    samples = []
    for line_number, row in enumerate(persister.read_csv_rows(path), start=1):
        try:
            value = float(row[0])
        except ValueError:
            raise ScenarioFileError(path, f"row {line_number} is not a number: {row[0]!r}") from None
        if not math.isfinite(value):
            raise ScenarioFileError(path, f"row {line_number} is not finite: {row[0]!r}")
        samples.append(value)

    if not samples:
        raise EmptySamples(f"{path}: no samples found")

    return samples
