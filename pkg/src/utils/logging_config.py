"""
Logging for the edge-coloring engine.

One named logger, ``edge_coloring``, shared by the drivers, the CLI and the
tools. Console records go to stderr; ``gen`` and ``color`` write their
results to stdout. A rotating log file can be attached at startup.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

LOGGER_NAME = "edge_coloring"
LOG_FORMAT = '%(asctime)s | %(levelname)-8s | %(message)s'
LOG_DATEFMT = '%H:%M:%S'
LOG_FILE_MAX_BYTES = 1024 * 1024
LOG_FILE_BACKUPS = 3

LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR
}


def _handler(handler: logging.Handler, level: int) -> logging.Handler:
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATEFMT))
    return handler


def setup_logger(name: str = LOGGER_NAME,
                 level: int = logging.INFO,
                 log_file: Optional[str] = None) -> logging.Logger:
    """
    Configure a logger with a stderr handler and an optional rotating file.

    Calling it again on the same name replaces the previous handlers.

    Args:
        name: Logger name
        level: Logging level applied to the logger and its handlers
        log_file: Path of a rotating log file (1 MB, 3 backups)

    Returns:
        The configured logger
    """
    configured = logging.getLogger(name)
    configured.setLevel(level)
    configured.handlers.clear()
    configured.addHandler(_handler(logging.StreamHandler(sys.stderr), level))
    if log_file:
        configured.addHandler(_handler(
            RotatingFileHandler(log_file, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUPS),
            level))
    return configured


logger = setup_logger()


def log_info(message: str):
    logger.info(message)


def log_warning(message: str):
    logger.warning(message)


def log_error(message: str):
    logger.error(message)


def log_debug(message: str):
    logger.debug(message)


def debug_enabled() -> bool:
    """True when DEBUG records would be emitted; guards costly message building."""
    return logger.isEnabledFor(logging.DEBUG)


def set_log_level(level: str):
    """Set the engine logger and its handlers to a level name; unknown names are ignored."""
    value = LEVELS.get(level.upper())
    if value is None:
        return
    logger.setLevel(value)
    for handler in logger.handlers:
        handler.setLevel(value)


def attach_log_file(log_file: str):
    """Add a rotating file handler at the current level, once per path."""
    for handler in logger.handlers:
        if isinstance(handler, RotatingFileHandler) and handler.baseFilename == os.path.abspath(log_file):
            return
    logger.addHandler(_handler(
        RotatingFileHandler(log_file, maxBytes=LOG_FILE_MAX_BYTES, backupCount=LOG_FILE_BACKUPS),
        logger.level))
