import pytest

from codescope.constructions import standard_corpus


@pytest.fixture(scope="session")
def corpus():
    """The shared code zoo; every member re-verified its parameters on build."""
    return standard_corpus()
