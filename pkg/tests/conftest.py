"""Pytest configuration and fixtures."""
import pytest

from superspencer.config import settings
from superspencer.grading import sl_standard_grading, spe_pair
from superspencer.prolong import cartan_prolong
from superspencer.services.cache import computation_cache
from superspencer.superalg import build_pe


@pytest.fixture(autouse=True)
def clear_computation_cache():
    """Start every test with an empty computation cache."""
    computation_cache.clear()
    yield
    computation_cache.clear()


@pytest.fixture
def restore_settings():
    """Restore mutable settings after a test changes them."""
    saved = settings.model_dump()
    yield settings
    for key, value in saved.items():
        setattr(settings, key, value)


@pytest.fixture
def vect2_pair():
    """Standard grading of sl(1|2), whose prolongation is vect(0|2)."""
    return sl_standard_grading(1, 2)


@pytest.fixture
def vect2_tower(vect2_pair):
    """Stabilized prolongation of the vect(0|2) pair."""
    return cartan_prolong(vect2_pair, 4)


@pytest.fixture
def spe2_pair():
    """spe(2) acting on its standard (2|2) module."""
    return spe_pair(2)


@pytest.fixture
def spe2_tower(spe2_pair):
    return cartan_prolong(spe2_pair, 3)


@pytest.fixture
def pe2():
    """pe(2) with its standard representation."""
    return build_pe(2)
