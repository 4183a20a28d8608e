import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

import pytest
from hypothesis import settings

from quandles import EnumerationOptions, enumerate_all, enumerate_classes

# first example of a property test may trigger a cached full enumeration
settings.register_profile("quandles", deadline=None)
settings.load_profile("quandles")

_reports: dict = {}
_streams: dict = {}


@pytest.fixture(scope="session")
def report_for():
    """Session-cached enumerate_classes(n, strategy)."""

    def get(n, strategy="backtracking"):
        key = (n, strategy)
        if key not in _reports:
            _reports[key] = enumerate_classes(n, EnumerationOptions(strategy=strategy))
        return _reports[key]

    return get


@pytest.fixture(scope="session")
def matrices_for():
    """Session-cached list(enumerate_all(n, strategy))."""

    def get(n, strategy="backtracking"):
        key = (n, strategy)
        if key not in _streams:
            _streams[key] = list(enumerate_all(n, EnumerationOptions(strategy=strategy)))
        return _streams[key]

    return get
