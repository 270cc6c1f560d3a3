import pytest

from cigenera.ci import normalize


@pytest.fixture
def X():
    """Shorthand constructor: X(2, 2, 2) is X_2(2,2)."""
    return lambda n, *degrees: normalize(n, list(degrees))
