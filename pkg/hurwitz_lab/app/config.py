"""
hurwitz-lab - Unified Configuration
Caps, seeds and logging for the group, algebra, series and graph engines.
"""
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide settings, overridable through HURWITZ_* environment variables."""

    # ========================================================================
    # Application Settings
    # ========================================================================
    APP_NAME: str = "hurwitz-lab"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False  # cross-checks mat_inverse against the adjugate

    # ========================================================================
    # Finite Groups
    # ========================================================================
    ORDER_CAP: int = 5040
    MAX_SYMMETRIC_DEGREE: int = 7
    FULL_ASSOCIATIVITY_MAX_ORDER: int = 256
    ASSOCIATIVITY_SAMPLE_FACTOR: int = 10

    # ========================================================================
    # Enumeration Oracles
    # ========================================================================
    WORK_CAP: int = 100_000_000
    ORACLE_MAX_ORDER: int = 120

    # ========================================================================
    # Exact Linear Algebra
    # ========================================================================
    ADJUGATE_MAX_DIMENSION: int = 8
    DEFAULT_SERIES_ORDER: int = 8

    # ========================================================================
    # Reproducibility
    # ========================================================================
    DEFAULT_SEED: int = 0

    # ========================================================================
    # Logging
    # ========================================================================
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    model_config = SettingsConfigDict(
        env_prefix="HURWITZ_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


def resolve_cap(value: Optional[int], default: int) -> int:
    """Return an explicit cap when given, the configured default otherwise."""
    return default if value is None else value


# Global settings instance
settings = Settings()
