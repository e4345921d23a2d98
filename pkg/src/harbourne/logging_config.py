"""
Logging configuration for Harbourne
"""
import logging
import sys
from typing import Optional

from harbourne.exceptions import BadParameter


class HarbourneLogger:
    """Centralized logging setup for Harbourne"""

    _loggers = {}
    _configured = False

    @staticmethod
    def setup_logging(
        level: str = "WARNING",
        log_file: Optional[str] = None,
        format_string: Optional[str] = None
    ):
        """
        Configure logging for Harbourne

        Args:
            level: Log level (DEBUG, INFO, WARNING, ERROR)
            log_file: Optional file path for logs
            format_string: Custom format string

        Raises:
            BadParameter: If the level is not a logging level name
        """
        numeric_level = logging.getLevelName(level.upper())
        if not isinstance(numeric_level, int):
            raise BadParameter(f"Unknown log level {level!r}")

        if format_string is None:
            format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

        root_logger = logging.getLogger("harbourne")
        root_logger.setLevel(numeric_level)

        # Reconfiguring replaces the previous handlers
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        # Console handler on stderr: stdout carries report output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(logging.Formatter(format_string))
        root_logger.addHandler(console_handler)

        # File handler if specified
        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(logging.Formatter(format_string))
            root_logger.addHandler(file_handler)

        HarbourneLogger._configured = True

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        """Get a logger for a module"""
        if not HarbourneLogger._configured:
            HarbourneLogger.setup_logging()

        if name not in HarbourneLogger._loggers:
            qualified = name if name.startswith("harbourne.") else f"harbourne.{name}"
            HarbourneLogger._loggers[name] = logging.getLogger(qualified)

        return HarbourneLogger._loggers[name]
