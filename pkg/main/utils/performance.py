import time
import logging


def execute_and_measure_duration(func):
    start_time = time.perf_counter()

    result = None
    error = None

    try:
        result = func()
    except Exception as ex:
        error = ex

    return result, error, time.perf_counter() - start_time


def log_execution_duration(func, identifier, enabled=True, level=logging.DEBUG):
    if enabled:
        logging.log(level, f'Started "{identifier}"')

    result, error, duration = execute_and_measure_duration(func)

    if enabled:
        logging.log(level, f'Finished "{identifier}" in {duration:.6f} seconds with {"success" if error is None else "error"} result')

    if error is not None:
        raise error

    return result
