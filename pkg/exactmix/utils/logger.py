"""
Logging for exactmix.

One rotating log file, ~/.exactmix/logs/exactmix.log by default
(EXACTMIX_LOG_DIR moves the directory). Library modules import ``logger``
and log sizes, widths and iteration counts at DEBUG.
"""

import logging
import os
from logging.handlers import RotatingFileHandler
from pathlib import Path

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_FILE_BYTES = 10 * 1024 * 1024
LOG_BACKUPS = 5


def log_directory() -> Path:
    default = Path.home() / ".exactmix" / "logs"
    return Path(os.getenv("EXACTMIX_LOG_DIR", default)).expanduser()


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.INFO)


def setup_logger(name: str = "exactmix", log_level: str = "INFO") -> logging.Logger:
    """
    Attach a rotating file handler to the named logger, once.

    Falls back to a NullHandler when the log directory cannot be created.
    """
    log = logging.getLogger(name)
    if log.handlers:
        return log

    log.setLevel(_level(os.getenv("EXACTMIX_LOG_LEVEL", log_level)))
    try:
        directory = log_directory()
        directory.mkdir(parents=True, exist_ok=True)
        handler: logging.Handler = RotatingFileHandler(
            directory / "exactmix.log",
            maxBytes=LOG_FILE_BYTES,
            backupCount=LOG_BACKUPS,
            encoding='utf-8',
        )
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
    except OSError:
        handler = logging.NullHandler()
    log.addHandler(handler)
    return log


def set_log_level(log_level: str) -> None:
    """Apply a configured log level to the shared logger."""
    logger.setLevel(_level(log_level))


logger = setup_logger()
