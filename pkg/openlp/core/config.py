from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Enumeration Limits
    MAX_ATOMS: int = Field(
        default=20, ge=1, le=64, description="Atoms a stable-model search may branch over"
    )
    MAX_COMPLETIONS: int = Field(default=65536, ge=1, description="Normal-form completion cap")
    MAX_GROUND_RULES: int = Field(default=200000, ge=1, description="Ground rule instance cap")

    # Grounding Configuration
    DEPTH_BOUND: Optional[int] = Field(
        default=None, ge=0, description="Term nesting bound; None keeps the source depth"
    )

    # Solver Configuration
    STRATEGY: str = Field(default="propagate")
    WORKERS: int = Field(default=1, ge=1, le=64)

    # Logging Configuration
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FORMAT: str = Field(default="pretty")
    LOG_FILE: Optional[str] = Field(default=None)

    model_config = SettingsConfigDict(
        env_prefix="OPENLP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is one of the allowed values."""
        allowed_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in allowed_levels:
            raise ValueError(f"LOG_LEVEL must be one of {allowed_levels}")
        return v_upper

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format is either 'json' or 'pretty'."""
        allowed_formats = {"json", "pretty"}
        v_lower = v.lower()
        if v_lower not in allowed_formats:
            raise ValueError(f"LOG_FORMAT must be one of {allowed_formats}")
        return v_lower

    @field_validator("STRATEGY")
    @classmethod
    def validate_strategy(cls, v: str) -> str:
        """Validate the stable-model enumeration strategy."""
        allowed = {"propagate", "brute-force"}
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"STRATEGY must be one of {allowed}")
        return v_lower


# this will be imported throughout the project
settings = Settings()
