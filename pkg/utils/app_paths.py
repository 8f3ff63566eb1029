# utils/app_paths.py
from __future__ import annotations

from pathlib import Path

_APP_DIR_NAME = "surgeryfill"


def _ensure_dir(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path


def base_dir() -> Path:
    """Root directory for settings, logs and cached results."""
    return _ensure_dir(Path.home() / f".{_APP_DIR_NAME}")


def user_data_dir() -> Path:
    """Directory that stores user editable data such as settings."""
    return _ensure_dir(base_dir() / "data")


def logs_dir() -> Path:
    return _ensure_dir(base_dir() / "logs")


def reports_dir(configured: str = "") -> Path:
    """Where exports land when ``--out`` is a bare file name."""
    if configured:
        return _ensure_dir(Path(configured).expanduser())
    return Path.cwd()


__all__ = [
    "base_dir",
    "user_data_dir",
    "logs_dir",
    "reports_dir",
]
