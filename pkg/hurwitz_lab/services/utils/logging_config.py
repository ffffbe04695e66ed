"""Logging configuration for the command line tools.

Console records go to stderr (or the stream a caller passes in); stdout
carries only the JSON/text result, so identical invocations stay
byte-identical.
"""
import logging
import sys
from typing import Optional, TextIO

from ..errors import InvalidInput

LOG_FORMAT = "%(asctime)s - %(command)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CommandFilter(logging.Filter):
    """Stamp every record with the subcommand being run."""

    def __init__(self, command: str):
        super().__init__()
        self.command = command

    def filter(self, record: logging.LogRecord) -> bool:
        record.command = self.command
        return True


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    command: str = "-",
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    """
    Configure the root logger for one command run.

    Args:
        level: One of LEVELS, any case
        log_file: Optional file receiving the same records
        command: Subcommand name stamped on every record
        stream: Console stream (default: sys.stderr)

    Returns:
        Configured root logger

    Raises:
        InvalidInput: For an unknown level
    """
    name = level.upper()
    if name not in LEVELS:
        raise InvalidInput(f"Unknown log level {level!r}; expected one of {', '.join(LEVELS)}")

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
    stamp = CommandFilter(command)

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, name))
    root_logger.handlers.clear()

    handlers = [logging.StreamHandler(stream or sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.addFilter(stamp)
        root_logger.addHandler(handler)
    return root_logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance for a specific module."""
    return logging.getLogger(name)
