"""Shared pytest configuration: hypothesis profiles, the slow marker, logging."""

import os

import pytest
from hypothesis import HealthCheck, settings

from twcut.config import reload_settings
from twcut.logger import configure_logging

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "thorough",
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much, HealthCheck.data_too_large],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run tests marked slow")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: scale and width checks, enabled with --runslow")
    # the slow run is the full acceptance run: 500 examples per property
    if config.getoption("--runslow") and "HYPOTHESIS_PROFILE" not in os.environ:
        settings.load_profile("thorough")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    configure_logging("WARNING")
    yield


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Tests never pick up TWCUT_* variables from the developer's shell."""
    for key in list(os.environ):
        if key.startswith("TWCUT_"):
            monkeypatch.delenv(key)
    reload_settings()
    yield
    monkeypatch.undo()
    reload_settings()
