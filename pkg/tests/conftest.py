import pytest

from tetragf2.search import search_base


@pytest.fixture(scope="session")
def base_store():
    """Full exhaustive search result; built once per session."""
    return search_base()
