"""Runtime settings read from the environment."""

from __future__ import annotations

import logging
import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

_ENV_KEYS = {
    "log_level": "LOG_LEVEL",
    "threads": "KVPOLY_THREADS",
    "lens_strategy": "KVPOLY_LENS_STRATEGY",
    "search_depth": "KVPOLY_SEARCH_DEPTH",
    "dubrovnik_max_crossings": "KVPOLY_DUBROVNIK_MAX_CROSSINGS",
    "statesum_max_vertices": "KVPOLY_STATESUM_MAX_VERTICES",
    "statesum_max_crossings": "KVPOLY_STATESUM_MAX_CROSSINGS",
}


class Settings(BaseModel):
    """Evaluation and oracle settings."""

    log_level: str = Field(default="WARNING", description="Logging level for the entry points")
    threads: int = Field(default=1, ge=1, description="Worker threads for skein state evaluation")
    lens_strategy: Literal["constructive", "search"] = Field(
        default="constructive", description="How triangle flip plans are found"
    )
    search_depth: int = Field(default=6, ge=1, description="Depth bound of the flip search")
    dubrovnik_max_crossings: int = Field(default=8, ge=0, description="Crossing bound of the link oracles")
    statesum_max_vertices: int = Field(default=3, ge=0, description="Vertex bound of the marker state sum")
    statesum_max_crossings: int = Field(default=3, ge=0, description="Crossing bound of the marker state sum")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        if v.upper() not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return v.upper()


def load_settings(**overrides: object) -> Settings:
    """Build settings from the environment (and a .env file), then apply non-None overrides."""
    load_dotenv()
    values: dict[str, object] = {field: os.environ[key] for field, key in _ENV_KEYS.items() if key in os.environ}
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        settings = Settings(**values)
    except ValidationError as e:
        raise ValueError(f"Invalid settings: {e.errors()[0]['msg']}") from e
    logger.debug(f"settings: {settings.model_dump()}")
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
