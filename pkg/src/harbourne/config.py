"""
Configuration for Harbourne computations and the command-line report
"""

import os
from typing import Optional

from harbourne.logging_config import HarbourneLogger

logger = HarbourneLogger.get_logger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def env_int(name: str, default: int, minimum: int = 1) -> int:
    """
    Read an integer environment variable

    Values that are not integers >= minimum fall back to the default with a
    warning; an unset or empty variable gives the default silently.
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer; using {default}")
        return default
    if value < minimum:
        logger.warning(f"{name}={value} is below {minimum}; using {default}")
        return default
    return value


def env_log_level(name: str, default: str) -> str:
    """Read a log level name from the environment, case-insensitively, falling back to the default"""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    level = raw.strip().upper()
    if level not in LOG_LEVELS:
        logger.warning(f"{name}={raw!r} is not one of {', '.join(LOG_LEVELS)}; using {default}")
        return default
    return level


def env_path(name: str) -> Optional[str]:
    """Read an optional path; empty counts as unset"""
    raw = os.getenv(name)
    return raw if raw else None


class Config:
    """Configuration settings for the computation engine and the CLI"""

    # Logging configuration
    # Reports go to stdout, so the console log stays quiet unless asked.
    LOG_LEVELS = LOG_LEVELS
    LOG_LEVEL = env_log_level("HARBOURNE_LOG_LEVEL", "WARNING")
    LOG_FILE = env_path("HARBOURNE_LOG_FILE")

    # Worker threads for row-parallel commands (sweep-cn, cover)
    # 1 keeps execution single-threaded
    JOBS = env_int("HARBOURNE_JOBS", 1)

    # Display precision for decimal approximations of exact rationals
    DECIMAL_PLACES = 4

    # Largest branching order accepted by the cover table
    COVER_N_LIMIT = 50

    # Branching orders used when checking defect identities
    DEFECT_CHECK_RANGE = range(2, 11)

    # Pullback degrees used when checking H-index invariance
    PULLBACK_CHECK_DEGREES = range(2, 8)

    # Largest number of singular points the exhaustive subset oracle accepts
    EXHAUSTIVE_LIMIT = 12

    # Output formats understood by the report emitters
    FORMATS = ("human", "csv", "json")
