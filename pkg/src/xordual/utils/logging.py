"""Logging setup for the xordual command and library."""

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

_QUIET = ("numpy", "scipy", "concurrent.futures")


def setup_logging(level: str = "INFO", stream: TextIO | None = None) -> None:
    """Configure the root logger.

    Records go to ``stream`` (stderr by default); stdout is reserved for term
    dumps and JSON results.
    """
    log_level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(stream or sys.stderr)],
        force=True,
    )
    for name in _QUIET:
        logging.getLogger(name).setLevel(logging.WARNING)


@contextmanager
def log_duration(logger: logging.Logger, what: str) -> Iterator[None]:
    """Log ``what`` with its wall time at INFO when the block exits."""
    started = time.perf_counter()
    try:
        yield
    finally:
        logger.info("%s finished in %.3f s", what, time.perf_counter() - started)
