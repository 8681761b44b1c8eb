"""Configuration management with validation."""
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.config.constants import DEFAULT_MAX_GENUS, GOLDEN_TABLES_FILENAME, MIN_GENUS

DEFAULT_GOLDEN_TABLES = Path(__file__).resolve().parent.parent / "verify" / GOLDEN_TABLES_FILENAME

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Application settings with validation."""

    model_config = SettingsConfigDict(env_prefix="CHARVAR_", env_file=".env", case_sensitive=False, extra="ignore")

    # Sweeps
    max_genus: int = Field(default=DEFAULT_MAX_GENUS, ge=MIN_GENUS, description="Largest genus any command may touch")
    workers: int = Field(default=4, ge=1, le=64, description="Threads used to fan out verification checks")

    # Logging
    debug_mode: bool = Field(default=False, description="Debug mode")
    log_level: str = Field(default="WARNING", description="Console log level")
    log_file_path: Optional[Path] = Field(default=None, description="Optional log file path")

    # Data
    golden_tables_path: Path = Field(default=DEFAULT_GOLDEN_TABLES, description="YAML file with the printed genus tables")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("golden_tables_path")
    @classmethod
    def validate_golden_tables_path(cls, v: Path) -> Path:
        if not v.exists():
            raise ValueError(f"Golden tables file not found: {v}")
        return v

    @field_validator("log_file_path", mode="before")
    @classmethod
    def create_parent_dirs(cls, v: Optional[str]) -> Optional[Path]:
        if v is None or v == "":
            return None
        path = Path(v)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path
