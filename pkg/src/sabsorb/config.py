"""Engine configuration and logging setup."""
from __future__ import annotations

import logging
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console
from rich.logging import RichHandler


class EngineSettings(BaseSettings):
    """Settings read from the environment (``SABSORB_*``) or a ``.env`` file."""

    model_config = SettingsConfigDict(env_prefix="SABSORB_", env_file=".env",
                                      extra="ignore")

    max_order: int = Field(256, ge=2)
    time_cap: float = Field(30.0, gt=0)
    log_level: str = "WARNING"
    corpus_n_max: int = Field(3, ge=1)
    small_order: int = Field(16, ge=2)
    report_format: Literal["text", "json"] = "text"
    include_timings: bool = False


_settings: EngineSettings | None = None


def get_settings() -> EngineSettings:
    """Get or create the settings singleton."""
    global _settings
    if _settings is None:
        _settings = EngineSettings()
    return _settings


def configure(**overrides: object) -> EngineSettings:
    """Replace the singleton with a copy carrying ``overrides`` (None values ignored)."""
    global _settings
    updates = {k: v for k, v in overrides.items() if v is not None}
    _settings = get_settings().model_copy(update=updates)
    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None


def resolve_cap(cap: int | None) -> int:
    return get_settings().max_order if cap is None else cap


def configure_logging(level: str | None = None) -> None:
    """Route the package loggers through rich."""
    level = (level or get_settings().log_level).upper()
    logger = logging.getLogger("sabsorb")
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
