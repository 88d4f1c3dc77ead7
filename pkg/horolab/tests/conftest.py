import numpy as np
import pytest

from horolab.config import get_settings


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so randomized checks are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def fresh_settings():
    """Clear the cached settings before and after a test that edits the environment."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
