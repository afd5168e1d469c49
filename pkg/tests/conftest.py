import os
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from reslat.enumeration import catalog_up_to
from reslat.fixtures import FIXTURES, fixture

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")


@lru_cache(maxsize=None)
def catalog(n: int = 4):
    return tuple(catalog_up_to(n))


@lru_cache(maxsize=None)
def all_fixtures():
    return tuple(fixture(name) for name in FIXTURES)


def catalog_entries(n: int = 4):
    return st.sampled_from(catalog(n))


def nontrivial_entries(n: int = 4):
    return st.sampled_from([A for A in catalog(n) if not A.trivial])


def algebras(n: int = 4):
    """Catalog entries of order <= n together with the named fixtures."""
    return st.sampled_from(catalog(n) + all_fixtures())


@pytest.fixture(params=list(FIXTURES))
def named(request):
    return fixture(request.param)


@pytest.fixture
def G6():
    return fixture("G6")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
