"""Runtime configuration and shared defaults"""

import logging
import os

logger = logging.getLogger(__name__)

THREADS_ENV = "HOFFLAT_THREADS"

DEFAULT_SATURATION_CAP = 16
DEFAULT_ENUMERATION_BOUND = 5
HARD_ENUMERATION_CAP = 7

JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100
FLOAT_TOLERANCE = 1e-9


def thread_count() -> int:
    """Worker count for internal thread pools"""
    default = os.cpu_count() or 1
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return default
    if value < 1:
        logger.warning("ignoring %s=%r: must be positive", THREADS_ENV, raw)
        return default
    return value
