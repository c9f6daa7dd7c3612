"""
Specorder - Configuration
Bounds, logging and sampling settings loaded from the environment
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Library and CLI settings loaded from environment."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =========================================================================
    # Enumeration Bounds
    # =========================================================================
    max_group_order: int = Field(
        default=1_000_000,
        gt=0,
        description="Hard bound on |W| (and on any enumerated subset of W)",
    )
    max_subgroup_order: int = Field(
        default=1_000_000,
        gt=0,
        description="Hard bound on |W_J| for exhaustive searches over W_J",
    )
    max_eo_genus: int = Field(
        default=8,
        gt=0,
        description="Largest g accepted by the Ekedahl-Oort poset builder",
    )

    # =========================================================================
    # Verification
    # =========================================================================
    random_seed: int = Field(
        default=0,
        description="Seed for sampled verification suites",
    )
    sample_pairs: int = Field(
        default=10_000,
        gt=0,
        description="Number of random pairs checked when a suite is sampled",
    )
    exhaustive_order: int = Field(
        default=48,
        gt=0,
        description="Groups up to this order are checked exhaustively",
    )

    # =========================================================================
    # Observability
    # =========================================================================
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    log_format: Literal["json", "console"] = "console"
    progress_every: int = Field(
        default=256,
        gt=0,
        description="Emit a progress record every N relation entries",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
