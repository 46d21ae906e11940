"""
Structured logging configuration.

Call setup_logging() once at CLI startup (from main.py).
All modules should use:
    import logging
    logger = logging.getLogger("polystab.<area>")

Logs go to stderr; stdout is reserved for reports.
"""

import logging
import sys
from typing import Optional


def setup_logging(environment: str = "development", level: Optional[str] = None):
    """Configure root + app logger with structured format."""

    if level:
        log_level = logging.getLevelName(level.upper())
        if not isinstance(log_level, int):
            log_level = logging.INFO
    else:
        log_level = logging.DEBUG if environment == "development" else logging.INFO

    fmt = "%(asctime)s | %(levelname)-8s | %(name)-24s | %(message)s"
    date_fmt = "%Y-%m-%d %H:%M:%S"

    logging.basicConfig(
        level=log_level,
        format=fmt,
        datefmt=date_fmt,
        stream=sys.stderr,
        force=True,  # override any existing config
    )

    # Quiet down noisy third-party loggers
    logging.getLogger("sympy").setLevel(logging.WARNING)
    logging.getLogger("networkx").setLevel(logging.WARNING)

    app_logger = logging.getLogger("polystab")
    app_logger.setLevel(log_level)
    app_logger.debug("Logging initialised: level=%s, env=%s", log_level, environment)
