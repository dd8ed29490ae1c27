import logging
import sys


def setup_root_logger(level: int = logging.INFO, stream=None) -> logging.Logger:
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Re-running only adjusts the level, handlers are attached once
    if root_logger.handlers:
        for handler in root_logger.handlers:
            handler.setLevel(level)
        return root_logger

    # Results go to stdout, so diagnostics default to stderr
    console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter('%(message)s'))

    root_logger.addHandler(console_handler)

    configure_third_party_loggers()

    return root_logger


def configure_third_party_loggers():
    library_configs = {
        'mcp': logging.WARNING,
    }

    for lib_name, log_level in library_configs.items():
        logging.getLogger(lib_name).setLevel(log_level)
