"""Tests for environment-driven settings."""
import pytest
from pydantic import ValidationError

from superspencer.config import Settings


def test_defaults():
    """Test the default configuration."""
    config = Settings(_env_file=None)
    assert config.threads == 1
    assert config.kmax is None
    assert config.check_invariants


def test_environment_overrides(monkeypatch):
    """Test that SUPERSPENCER_* variables are read."""
    monkeypatch.setenv("SUPERSPENCER_KMAX", "5")
    monkeypatch.setenv("SUPERSPENCER_THREADS", "4")
    config = Settings(_env_file=None)
    assert config.kmax == 5
    assert config.threads == 4


@pytest.mark.parametrize(
    "overrides",
    [
        {"threads": 0},
        {"kmax": 0},
        {"dense_fallback_threshold": 0},
        {"dense_fallback_threshold": 1.5},
        {"log_level": "LOUD"},
    ],
)
def test_invalid_values(overrides):
    """Test that out-of-range values are rejected."""
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **overrides)
