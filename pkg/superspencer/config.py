"""Configuration settings for superspencer."""
import logging
from typing import Optional

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Service settings
    app_name: str = "superspencer"
    app_version: str = "0.1.0"
    log_level: str = "INFO"

    # Execution settings
    threads: int = 1  # upper bound on cases run in parallel

    # Prolongation settings
    kmax: Optional[int] = None  # None means the largest requested order

    # Exact elimination settings
    dense_fallback_threshold: float = 0.5  # fill ratio above which elimination goes dense

    # Expectation data
    tables_dir: Optional[str] = None  # None means the tables shipped with the package

    # Report settings
    report_schema_version: str = "1"
    include_timing: bool = False
    check_invariants: bool = True

    @model_validator(mode="after")
    def validate_config(self):
        """Validate all configuration values."""
        errors = []

        if self.threads < 1:
            errors.append("SUPERSPENCER_THREADS must be at least 1")

        if not 0 < self.dense_fallback_threshold <= 1:
            errors.append("SUPERSPENCER_DENSE_FALLBACK_THRESHOLD must lie in (0, 1]")

        if not isinstance(logging.getLevelName(self.log_level.upper()), int):
            errors.append(f"SUPERSPENCER_LOG_LEVEL '{self.log_level}' is not a logging level")

        if self.kmax is not None and self.kmax < 1:
            errors.append("SUPERSPENCER_KMAX must be at least 1")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")

        return self

    model_config = SettingsConfigDict(
        env_prefix="SUPERSPENCER_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields from .env
    )


settings = Settings()
