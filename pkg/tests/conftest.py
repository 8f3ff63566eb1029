# tests/conftest.py
from __future__ import annotations

import logging
from logging.handlers import RotatingFileHandler

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("surgeryfill", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow,
                                                 HealthCheck.filter_too_much])
settings.load_profile("surgeryfill")


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Settings, logs and exports land under a throwaway home directory."""
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setenv("HOME", str(home))
    yield home
    # drop the handlers setup_logging installed; pytest's own capture handlers stay
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RotatingFileHandler) or type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
            handler.close()
