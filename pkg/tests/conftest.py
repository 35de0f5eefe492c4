import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria checks")
