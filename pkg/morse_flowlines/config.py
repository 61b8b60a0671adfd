"""Configuration management for morse-flowlines.

Loads settings from environment variables and .env files.
Provides typed configuration objects for the flowline engine, the
randomized checks and logging.
"""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings


class EngineConfig(BaseSettings):
    """Flowline engine configuration."""

    max_len: int | None = Field(
        default=None,
        description="Path length cap for flowline enumeration (None = no cap)",
        validation_alias="MF_MAX_LEN",
    )
    max_alg_steps: int = Field(
        default=100_000,
        description="Upper bound on algorithm steps in a single run",
        validation_alias="MF_MAX_ALG_STEPS",
    )
    workers: int = Field(
        default=1,
        description="Worker threads for moduli assembly and differential columns",
        validation_alias="MF_WORKERS",
    )

    class Config:
        env_prefix = "MF_"
        case_sensitive = False


class RandomConfig(BaseSettings):
    """Randomized check configuration."""

    seed: int = Field(
        default=0,
        description="Seed for random gradient field generation",
        validation_alias="MF_SEED",
    )
    random_fields: int = Field(
        default=25,
        description="Number of random gradient fields drawn by randomized checks",
        validation_alias="MF_RANDOM_FIELDS",
    )

    class Config:
        env_prefix = "MF_"
        case_sensitive = False


class LoggingConfig(BaseSettings):
    """Logging configuration."""

    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
        validation_alias="MF_LOG_LEVEL",
    )
    log_format: str = Field(
        default="json",
        description="Log format (json or text)",
        validation_alias="MF_LOG_FORMAT",
    )

    class Config:
        env_prefix = "MF_"
        case_sensitive = False


class AppConfig(BaseSettings):
    """Root application configuration."""

    debug: bool = Field(
        default=False,
        description="Enable debug mode",
        validation_alias="MF_DEBUG",
    )
    env: str = Field(
        default="development",
        description="Environment (development, ci, production)",
        validation_alias="MF_ENV",
    )

    engine: EngineConfig = Field(default_factory=EngineConfig)
    random: RandomConfig = Field(default_factory=RandomConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    class Config:
        env_prefix = "MF_"
        case_sensitive = False

    @classmethod
    def from_env(cls, env_file: Path | None = None) -> "AppConfig":
        """Load configuration from environment and optional .env file.

        Args:
            env_file: Optional path to .env file to load first.

        Returns:
            AppConfig instance with all settings loaded.
        """
        if env_file and env_file.exists():
            from dotenv import load_dotenv

            load_dotenv(env_file)

        return cls()


def get_config() -> AppConfig:
    """Get application configuration.

    Returns:
        AppConfig instance loaded from environment.
    """
    return AppConfig.from_env(env_file=Path(".env"))
