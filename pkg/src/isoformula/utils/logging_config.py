"""
isoformula.utils.logging_config
-------------------------------
Logging configuration and utilities for isoformula.
"""

import logging
import sys
from typing import Optional

# Module-level logger
_logger: Optional[logging.Logger] = None

ROOT_LOGGER_NAME = "isoformula"


def get_logger(name: str = ROOT_LOGGER_NAME) -> logging.Logger:
    """
    Get a configured logger instance for isoformula.

    The level comes from ISOFORMULA_LOG_LEVEL or the logging.level file setting.
    Valid values: DEBUG, INFO, WARNING, ERROR, CRITICAL
    Default: WARNING (decision procedures only log at DEBUG)

    Child loggers (``isoformula.core.canon`` and so on) propagate to the
    package logger, so the handler is attached there once.

    Args:
        name: Logger name (default: "isoformula")

    Returns:
        Configured logger instance
    """
    global _logger

    if _logger is not None and _logger.name == name:
        return _logger

    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("[%(name)s] %(message)s"))
        root.addHandler(handler)

        from ..models.config import config

        log_level = config.log_level.upper()
        try:
            root.setLevel(getattr(logging, log_level))
        except AttributeError:
            root.setLevel(logging.WARNING)

    logger = logging.getLogger(name)
    if name == ROOT_LOGGER_NAME:
        _logger = logger
    return logger


def configure_logging(level: str = "WARNING") -> None:
    """
    Configure logging for isoformula.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    logger = get_logger()
    try:
        logger.setLevel(getattr(logging, level.upper()))
    except AttributeError:
        logger.setLevel(logging.WARNING)
