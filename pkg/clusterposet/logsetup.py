"""
Logging setup for the command-line driver.

Results go to stdout; everything logged goes to stderr and, when
configured, to a rotating log file.
"""

from __future__ import annotations

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from clusterposet.config import get_config_path, get_int, get_str

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level_override: str | None = None) -> logging.Logger:
    """
    Configure the root logger from the [logging] config section.

    Args:
        level_override (str, optional): Level name taking precedence over
            the configured one (e.g. from --log-level).

    Returns:
        logging.Logger: The configured root logger.
    """
    level_name = (level_override or get_str("logging", "level", "INFO")).upper()
    log_file = get_str("logging", "file", None)
    max_bytes = get_int("logging", "max_bytes", 10_485_760)
    backup_count = get_int("logging", "backup_count", 3)

    logger = logging.getLogger()
    logger.setLevel(logging.INFO)

    # Repeated calls (tests, embedded use) must not stack handlers.
    for handler in list(logger.handlers):
        if getattr(handler, "_cluster_poset", False):
            logger.removeHandler(handler)
            handler.close()

    log_format = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(log_format)
    console_handler._cluster_poset = True
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file).expanduser()
        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=max_bytes,
            backupCount=backup_count,
        )
        file_handler.setFormatter(log_format)
        file_handler._cluster_poset = True
        logger.addHandler(file_handler)

    if hasattr(logging, level_name):
        logger.setLevel(getattr(logging, level_name))
    else:
        logging.warning("Unknown log level %r, staying at INFO", level_name)

    logging.debug("Logging initialized at %s level", level_name)
    logging.debug("Using config file: %s", get_config_path())
    return logger
