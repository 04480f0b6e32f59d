"""Configuration module for feature extraction defaults."""

import logging
import math
import os
from typing import TypedDict

from dotenv import load_dotenv


class Settings(TypedDict):
    """Type definition for runtime defaults (overridable by CLI flags)."""

    log_base: float
    log_bins: int
    bench_reps: int
    log_level: str


DEFAULT_LOG_BASE = 2.0
DEFAULT_LOG_BINS = 9
DEFAULT_BENCH_REPS = 5
DEFAULT_LOG_LEVEL = "INFO"


def _read_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a number, got {raw!r}") from e
    if not math.isfinite(value) or value <= 0 or value == 1:
        raise ValueError(f"{name} must be finite, positive and not 1, got {raw!r}")
    return value


def _read_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def load_settings() -> Settings:
    """
    Load defaults from the environment (and a .env file, if present).

    Returns:
        Settings with log base, log-histogram bin count, benchmark repetitions
        and log level.

    Raises:
        ValueError: If a variable is set to an out-of-range value.
    """
    load_dotenv()

    log_level = os.getenv("RLE_FEATURES_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ValueError(f"RLE_FEATURES_LOG_LEVEL is not a logging level: {log_level!r}")

    return Settings(
        log_base=_read_float("RLE_FEATURES_LOG_BASE", DEFAULT_LOG_BASE),
        log_bins=_read_int("RLE_FEATURES_LOG_BINS", DEFAULT_LOG_BINS, minimum=2),
        bench_reps=_read_int("RLE_FEATURES_BENCH_REPS", DEFAULT_BENCH_REPS, minimum=1),
        log_level=log_level,
    )


__all__ = ["load_settings", "Settings"]
