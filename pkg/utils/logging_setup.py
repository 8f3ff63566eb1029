# utils/logging_setup.py
from __future__ import annotations

import logging
import sys
from logging.handlers import RotatingFileHandler

from .app_paths import logs_dir

_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def verbosity_level(verbose: int, default: str = "WARNING") -> int:
    """-v gives INFO, -vv gives DEBUG; otherwise the configured level."""
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    level = logging.getLevelName(str(default).upper())
    return level if isinstance(level, int) else logging.WARNING


def setup_logging(level=logging.WARNING, to_file: bool = True) -> None:
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    if not isinstance(level, int):
        level = logging.WARNING
    fmt = logging.Formatter(_FORMAT)

    root = logging.getLogger()
    root.setLevel(min(level, logging.INFO) if to_file else level)
    root.handlers.clear()

    if to_file:
        try:
            handler = RotatingFileHandler(
                logs_dir() / "app.log", maxBytes=2_000_000, backupCount=5, encoding="utf-8"
            )
        except OSError:
            handler = None
        if handler is not None:
            handler.setFormatter(fmt)
            handler.setLevel(min(level, logging.INFO))
            root.addHandler(handler)

    # stderr only; stdout carries results
    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(fmt)
    sh.setLevel(level)
    root.addHandler(sh)


__all__ = ["setup_logging", "verbosity_level"]
