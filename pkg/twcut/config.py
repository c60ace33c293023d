"""
Configuration loader for environment variables and .env files
"""

from contextlib import contextmanager
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Runtime settings.

    Every field can be set through a ``TWCUT_<FIELD>`` environment variable or
    a ``.env`` file in the working directory.
    """

    model_config = SettingsConfigDict(
        env_prefix="TWCUT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    k_max: int = Field(default=16, ge=1, le=20)
    oracle_max_vertices: int = Field(default=14, ge=1, le=24)
    oracle_max_edges: int = Field(default=24, ge=1, le=40)
    threads: int = Field(default=1, ge=1, le=64)
    log_level: str = "WARNING"
    log_file: Optional[Path] = None
    debug_checks: bool = False
    max_connector_subsets: int = Field(default=4096, ge=1)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize and validate the log level name."""
        level = v.strip().upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{v}'")
        return level


_overrides: list = []


@lru_cache(maxsize=1)
def _load_settings() -> Settings:
    return Settings()


def get_settings() -> Settings:
    """
    Get the active settings.

    Returns:
        The innermost override if one is active, else the settings loaded
        from the environment (cached after the first call)
    """
    if _overrides:
        return _overrides[-1]
    return _load_settings()


def reload_settings() -> Settings:
    """Drop the cached settings and read the environment again."""
    _load_settings.cache_clear()
    return get_settings()


@contextmanager
def override_settings(**changes) -> Iterator[Settings]:
    """
    Temporarily replace fields of the active settings.

    Args:
        **changes: Field values to override

    Yields:
        The overridden settings object
    """
    updated = get_settings().model_copy(update=changes)
    _overrides.append(updated)
    try:
        yield updated
    finally:
        _overrides.pop()
