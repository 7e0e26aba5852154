import pytest

from skewtab.verify import skew_shapes


@pytest.fixture(scope="session")
def small_connected_shapes():
    """Every connected skew shape with outer size at most 6 (fast shared corpus)."""
    return list(skew_shapes(6))
