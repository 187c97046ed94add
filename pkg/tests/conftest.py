import functools

import pytest
from hypothesis import settings

from laurentcf import TruncatedSeries, certify_by_doubling, expand, series_source

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@functools.lru_cache(maxsize=None)
def deep_expansion():
    """28 certified quotients of the word series (blocks 0..6); built once."""
    return certify_by_doubling(series_source(), 28, start_precision=64)


@functools.lru_cache(maxsize=None)
def small_expansion():
    """The 6 quotients pinned down by a precision-30 truncation."""
    series = TruncatedSeries.from_source(series_source(), 30)
    return expand(*series.to_rational(), precision=30, max_terms=6)


@pytest.fixture(scope="session")
def theta_deep():
    return deep_expansion()


@pytest.fixture(scope="session")
def theta_small():
    return small_expansion()
