"""
Configuration Management for parinv

This module provides centralized configuration with validation, type
conversion and clear error messages for invalid environment variables.

Settings are read once at startup (optionally from a .env file), validated
immediately, and then shared through get_config(). Command-line flags
override individual values on top of the loaded configuration.
"""

import os
import logging
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv


logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass
class ParinvConfig:
    """Toolkit configuration settings."""

    # Logging
    log_level: str = field(default="WARNING")

    # Size guard for symbolic work
    n_limit: int = field(default=12)

    # Verification
    workers: int = field(default=1)
    seed: int = field(default=42)
    independence_trials: int = field(default=3)

    def __post_init__(self):
        """Validate configuration after initialization."""
        self._validate_limits()
        self._setup_logging()

    def _validate_limits(self):
        """Validate numeric settings."""
        if self.n_limit < 1:
            raise ValueError(
                f"Invalid size limit {self.n_limit}. Set PARINV_N_LIMIT to a positive integer."
            )

        if self.workers < 1:
            raise ValueError(
                f"Invalid worker count {self.workers}. Set PARINV_WORKERS to a positive integer."
            )

        if self.independence_trials < 1:
            raise ValueError(
                f"Invalid trial count {self.independence_trials}. Set PARINV_TRIALS to a positive integer."
            )

    def _setup_logging(self):
        """Configure logging based on settings."""
        numeric_level = getattr(logging, self.log_level.upper(), None)
        if not isinstance(numeric_level, int):
            raise ValueError(f"Invalid log level: {self.log_level}")

        logging.basicConfig(level=numeric_level, format=LOG_FORMAT)
        logging.getLogger().setLevel(numeric_level)

    def log_config_summary(self):
        """Log a summary of the configuration."""
        logger.info("=== parinv Configuration ===")
        logger.info(f"Log Level: {self.log_level}")
        logger.info(f"Size Limit (n): {self.n_limit}")
        logger.info(f"Workers: {self.workers}")
        logger.info(f"Seed: {self.seed}")
        logger.info(f"Independence Trials: {self.independence_trials}")
        logger.info("============================")


def load_config() -> ParinvConfig:
    """
    Load and validate configuration from environment variables.

    Returns:
        ParinvConfig: Validated configuration object

    Raises:
        ValueError: If configuration is invalid
    """
    load_dotenv()

    try:
        config = ParinvConfig(
            log_level=_get_str_env_required("PARINV_LOG", "WARNING"),
            n_limit=_get_int_env("PARINV_N_LIMIT", 12),
            workers=_get_int_env("PARINV_WORKERS", 1),
            seed=_get_int_env("PARINV_SEED", 42),
            independence_trials=_get_int_env("PARINV_TRIALS", 3),
        )

        config.log_config_summary()
        logger.debug("Configuration loaded successfully")
        return config

    except Exception as e:
        logger.error(f"Failed to load configuration: {e}")
        raise


def _get_str_env_required(key: str, default: str) -> str:
    """Get string environment variable with a guaranteed non-None return."""
    value = os.getenv(key, default)
    return value.strip() if value else default


def _get_int_env(key: str, default: int) -> int:
    """Get integer environment variable with validation."""
    value = os.getenv(key)
    if value is None or not value.strip():
        return default

    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable {key}='{value}' is not a valid integer")


# Global configuration instance, set by init_config()
config: Optional[ParinvConfig] = None


def get_config() -> ParinvConfig:
    """
    Get the global configuration instance.

    Raises:
        RuntimeError: If configuration hasn't been loaded yet
    """
    if config is None:
        raise RuntimeError(
            "Configuration not loaded. Call init_config() first, typically in your main() function."
        )
    return config


def init_config() -> ParinvConfig:
    """Initialize the global configuration once at startup."""
    global config
    config = load_config()
    return config
