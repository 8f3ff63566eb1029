# utils/settings.py
from __future__ import annotations

import logging
import re
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import yaml

from core.errors import InvariantError

from .app_paths import user_data_dir

log = logging.getLogger(__name__)


def settings_file() -> Path:
    return user_data_dir() / "settings.yaml"


@dataclass
class AppSettings:
    output_format: str = "text"          # text|json
    knot_grid: str = "n=2..8,m=1..5"
    link_grid: str = "n=1..6"
    g_range: str = "g=2..40"
    torus_limit: int = 50
    h_window_pad: int = 2
    workers: int = 4
    log_level: str = "WARNING"
    reports_dir: str = ""


def load_settings(path: Path | str | None = None) -> AppSettings:
    path = Path(path) if path is not None else settings_file()
    if not path.exists():
        return AppSettings()
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
        if not isinstance(data, dict):
            raise ValueError("top level is not a mapping")
    except (OSError, ValueError, yaml.YAMLError) as e:
        log.warning("ignoring settings file %s: %s", path, e)
        return AppSettings()
    known = {f.name for f in fields(AppSettings)}
    unknown = sorted(set(data) - known)
    if unknown:
        log.warning("unknown settings keys ignored: %s", ", ".join(map(str, unknown)))
    merged = {**asdict(AppSettings()), **{k: v for k, v in data.items() if k in known}}
    return AppSettings(**merged)


def save_settings(s: AppSettings, path: Path | str | None = None) -> None:
    path = Path(path) if path is not None else settings_file()
    path.write_text(yaml.safe_dump(asdict(s), sort_keys=True, allow_unicode=True), encoding="utf-8")


_RANGE_RE = re.compile(r"^\s*([a-z]\w*)\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_grid(text: str) -> dict[str, range]:
    """'n=2..8,m=1..5' -> {'n': range(2, 9), 'm': range(1, 6)} (inclusive ends)."""
    grid: dict[str, range] = {}
    for part in str(text).split(","):
        m = _RANGE_RE.match(part)
        if not m:
            raise InvariantError(f"malformed grid component {part.strip()!r}; expected name=A..B")
        name, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
        if lo > hi:
            raise InvariantError(f"empty grid range {name}={lo}..{hi}")
        if name in grid:
            raise InvariantError(f"grid variable {name!r} given twice")
        grid[name] = range(lo, hi + 1)
    return grid


__all__ = ["AppSettings", "load_settings", "save_settings", "settings_file", "parse_grid"]
