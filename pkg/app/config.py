"""
Configuration management using Pydantic settings.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Theorem checks
    certificate_depth: int = Field(
        default=50, ge=1, description="Number of ceiling certificates n = 1..N"
    )

    # Oracle fitting
    fit_window: int = Field(
        default=200, description="Window M for single-filtration limit fits"
    )
    poly_fit_window: int = Field(
        default=150, description="Window M for mixed-polynomial oracle fits"
    )
    min_fit_points: int = Field(
        default=8, description="Smallest window accepted by limit_fit"
    )

    # Output
    output_format: str = Field(
        default="json", description="Report format (json, markdown or csv)"
    )

    # Logging Configuration
    log_level: str = Field(default="INFO", description="Logging level")
    log_format: str = Field(default="text", description="Log format (json or text)")


# Global settings instance
settings = Settings()
